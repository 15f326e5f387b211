#include "picard/scalar.hpp"

#include "picard/errors.hpp"

namespace picard {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

CoeffDomain CoeffDomain::prime_field(long p) {
  if (!is_prime(p)) throw PresentationError("prime-field modulus " + std::to_string(p) + " is not prime");
  return {CoeffKind::PrimeField, p};
}

Scalar CoeffDomain::normalize(const Scalar& q) const {
  switch (kind) {
    case CoeffKind::Rationals:
      return q;
    case CoeffKind::Integers:
      if (q.get_den() != 1) throw PresentationError("non-integer coefficient " + q.get_str() + " over Z");
      return q;
    case CoeffKind::PrimeField: {
      mpz_class mod(p);
      mpz_class den = q.get_den();
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0) {
        throw PresentationError("denominator of " + q.get_str() + " vanishes mod " + std::to_string(p));
      }
      mpz_class r = (q.get_num() * inv) % mod;
      if (r < 0) r += mod;
      return Scalar(r);
    }
  }
  return q;
}

bool CoeffDomain::is_unit(const Scalar& q) const {
  if (q == 0) return false;
  if (kind == CoeffKind::Integers) return q == 1 || q == -1;
  return true;
}

Scalar CoeffDomain::inverse(const Scalar& q) const {
  if (!is_unit(q)) throw PreconditionError("scalar " + q.get_str() + " is not a unit in " + name());
  Scalar r = 1 / q;
  return normalize(r);
}

bool CoeffDomain::divides(const Scalar& b, const Scalar& a) const {
  if (b == 0) return a == 0;
  if (kind != CoeffKind::Integers) return true;
  mpz_class r = a.get_num() % b.get_num();
  return r == 0;
}

std::string CoeffDomain::name() const {
  switch (kind) {
    case CoeffKind::Integers:
      return "Z";
    case CoeffKind::Rationals:
      return "Q";
    case CoeffKind::PrimeField:
      return "F" + std::to_string(p);
  }
  return "?";
}

Scalar parse_scalar(const std::string& text) {
  Scalar q;
  if (q.set_str(text, 10) != 0) throw PresentationError("malformed scalar '" + text + "'");
  q.canonicalize();
  return q;
}

std::string scalar_to_string(const Scalar& q) { return q.get_str(10); }

}  // namespace picard
