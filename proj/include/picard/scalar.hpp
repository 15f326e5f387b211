#pragma once

#include <gmpxx.h>

#include <string>

namespace picard {

using Scalar = mpq_class;

enum class CoeffKind { Integers, Rationals, PrimeField };

/// The prime coefficient domain at the bottom of every tower: ℤ, ℚ or 𝔽_p.
/// Scalars are always stored as canonical rationals; for 𝔽_p the representative
/// lies in [0, p).
struct CoeffDomain {
  CoeffKind kind = CoeffKind::Rationals;
  long p = 0;

  static CoeffDomain integers() { return {CoeffKind::Integers, 0}; }
  static CoeffDomain rationals() { return {CoeffKind::Rationals, 0}; }
  /// Throws PresentationError unless p is prime (trial division).
  static CoeffDomain prime_field(long p);

  bool is_field() const { return kind != CoeffKind::Integers; }
  long characteristic() const { return kind == CoeffKind::PrimeField ? p : 0; }

  /// Canonical representative; throws PresentationError for a non-integer in ℤ
  /// or a denominator divisible by p in 𝔽_p.
  Scalar normalize(const Scalar& q) const;
  bool is_unit(const Scalar& q) const;
  /// Precondition: is_unit(q).
  Scalar inverse(const Scalar& q) const;
  /// Exact quotient a/b inside the domain, or false.
  bool divides(const Scalar& b, const Scalar& a) const;

  std::string name() const;

  bool operator==(const CoeffDomain& o) const { return kind == o.kind && p == o.p; }
};

bool is_prime(long n);

/// Parses "3", "-7/2", "12345678901234567890" into a canonical rational.
Scalar parse_scalar(const std::string& text);
std::string scalar_to_string(const Scalar& q);

}  // namespace picard
