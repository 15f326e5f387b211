#include "picard/localization.hpp"

#include "picard/arith.hpp"
#include "picard/errors.hpp"

namespace picard {

namespace {

void require_same_base(const LocalizedElement& a, const LocalizedElement& b) {
  if (a.base != b.base) {
    throw PreconditionError("localized elements over different bases " + a.base.to_string() + " and " +
                            b.base.to_string());
  }
}

}  // namespace

LocalizedElement LocalizedElement::to_product_chart(const Element& t) const {
  return {numerator * t.pow(exponent), base * t, exponent};
}

LocalizedElement LocalizedElement::operator*(const LocalizedElement& o) const {
  require_same_base(*this, o);
  return {numerator * o.numerator, base, exponent + o.exponent};
}

LocalizedElement LocalizedElement::operator+(const LocalizedElement& o) const {
  require_same_base(*this, o);
  unsigned e = std::max(exponent, o.exponent);
  return {numerator * base.pow(e - exponent) + o.numerator * base.pow(e - o.exponent), base, e};
}

LocalizedElement LocalizedElement::reduced() const {
  LocalizedElement r = *this;
  while (r.exponent > 0) {
    auto q = try_divide(r.numerator, r.base);
    if (!q) break;
    r.numerator = *q;
    --r.exponent;
  }
  return r;
}

std::string LocalizedElement::to_string() const {
  if (exponent == 0) return numerator.to_string();
  std::string d = "(" + base.to_string() + ")";
  if (exponent > 1) d += "^" + std::to_string(exponent);
  return "(" + numerator.to_string() + ")/" + d;
}

bool localized_equal(const LocalizedElement& p, const LocalizedElement& q) {
  if (!same_ring(p.ring(), q.ring())) throw RingMismatch("comparing fractions over different rings");
  return p.numerator * q.denominator() == q.numerator * p.denominator();
}

std::optional<LocalizedElement> localized_inverse(const LocalizedElement& x, unsigned bound) {
  if (x.numerator.is_zero()) return std::nullopt;
  Element sk = x.ring()->one();
  for (unsigned k = 0; k <= bound; ++k) {
    if (auto q = try_divide(sk, x.numerator)) {
      // (a/s^n)^{-1} = s^n q / s^k with a q = s^k.
      return LocalizedElement{*q * x.base.pow(x.exponent), x.base, k}.reduced();
    }
    sk *= x.base;
  }
  return std::nullopt;
}

std::optional<Element> as_global(const LocalizedElement& x) {
  return try_divide(x.numerator, x.denominator());
}

BezoutCertificate BezoutCertificate::certified(std::vector<Element> elements, std::vector<Element> coefficients) {
  BezoutCertificate c{std::move(elements), std::move(coefficients)};
  if (!verify_bezout(c)) throw CertificateError("Bezout certificate does not combine to 1");
  return c;
}

bool verify_bezout(const BezoutCertificate& cert) {
  if (cert.elements.empty() || cert.elements.size() != cert.coefficients.size()) return false;
  Element sum(cert.elements.front().ring());
  for (std::size_t i = 0; i < cert.elements.size(); ++i) sum += cert.coefficients[i] * cert.elements[i];
  return sum.is_one();
}

std::optional<BezoutCertificate> find_bezout(const std::vector<Element>& elements) {
  if (elements.empty()) return std::nullopt;
  const Ring& ring = elements.front().ring();
  if (!is_pid_layer(ring)) return std::nullopt;
  // Fold: g = sum coeffs_i s_i throughout.
  Element g = elements.front();
  std::vector<Element> coeffs{ring->one()};
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (g.is_zero() && elements[i].is_zero()) {
      coeffs.push_back(ring->zero());
      continue;
    }
    ExtGcd e = ext_gcd(g, elements[i]);
    for (auto& c : coeffs) c = c * e.u;
    coeffs.push_back(e.v);
    g = e.g;
  }
  if (g.is_zero()) return std::nullopt;
  auto inv = inverse(g);
  if (!inv) return std::nullopt;
  for (auto& c : coeffs) c = c * *inv;
  BezoutCertificate cert{elements, coeffs};
  if (!verify_bezout(cert)) return std::nullopt;
  return cert;
}

BezoutCertificate bezout_for_powers(const BezoutCertificate& st, unsigned n, unsigned m) {
  if (st.elements.size() != 2 || !verify_bezout(st)) throw CertificateError("need a verified certificate for {s, t}");
  const Element& s = st.elements[0];
  const Element& t = st.elements[1];
  const Ring& ring = s.ring();
  Element sn = s.pow(n);
  Element tm = t.pow(m);
  if (n == 0) return BezoutCertificate::certified({sn, tm}, {ring->one(), ring->zero()});
  if (m == 0) return BezoutCertificate::certified({sn, tm}, {ring->zero(), ring->one()});
  const Element a = st.coefficients[0] * s;
  const Element& cs = st.coefficients[0];
  const Element& ct = st.coefficients[1];
  const Element b = ct * t;
  const unsigned total = n + m - 1;
  Element u(ring);
  Element v(ring);
  mpz_class binom = 1;
  for (unsigned k = 0; k <= total; ++k) {
    Scalar bk(binom);
    if (k >= n) {
      u += cs.pow(k) * s.pow(k - n) * b.pow(total - k) * bk;
    } else {
      v += a.pow(k) * ct.pow(total - k) * t.pow(total - k - m) * bk;
    }
    binom = binom * (total - k) / (k + 1);
  }
  return BezoutCertificate::certified({sn, tm}, {u, v});
}

}  // namespace picard
