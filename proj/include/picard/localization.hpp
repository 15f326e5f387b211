#pragma once

#include <optional>
#include <string>
#include <vector>

#include "picard/ring.hpp"

namespace picard {

/// numerator / base^exponent in A_base. The ring is assumed to be a domain.
struct LocalizedElement {
  Element numerator;
  Element base;
  unsigned exponent = 0;

  static LocalizedElement global(const Element& a, const Element& s) { return {a, s, 0}; }
  const Ring& ring() const { return numerator.ring(); }
  Element denominator() const { return base.pow(exponent); }

  /// Same value with denominator a power of s*t: a/s^n = a t^n / (st)^n.
  LocalizedElement to_product_chart(const Element& t) const;
  /// Arithmetic inside one localization (same base required).
  LocalizedElement operator*(const LocalizedElement& o) const;
  LocalizedElement operator+(const LocalizedElement& o) const;
  LocalizedElement operator-() const { return {-numerator, base, exponent}; }
  LocalizedElement operator*(const Element& a) const { return {numerator * a, base, exponent}; }
  /// Cancels common powers of the base when the division is exact.
  LocalizedElement reduced() const;

  std::string to_string() const;
};

/// a/s^n == b/t^m  iff  a t^m == b s^n (domain).
bool localized_equal(const LocalizedElement& p, const LocalizedElement& q);

/// Inverse in A_s when it exists: a/s^n is a unit iff a divides some s^k.
/// Searches k <= bound.
std::optional<LocalizedElement> localized_inverse(const LocalizedElement& x, unsigned bound = 8);

/// Element of A if the fraction has an exact representative.
std::optional<Element> as_global(const LocalizedElement& x);

/// Comaximality witness sum c_i s_i = 1.
struct BezoutCertificate {
  std::vector<Element> elements;
  std::vector<Element> coefficients;

  /// Throws CertificateError when the combination is not 1.
  static BezoutCertificate certified(std::vector<Element> elements, std::vector<Element> coefficients);
};

/// True iff the certificate combination reduces to 1.
bool verify_bezout(const BezoutCertificate& cert);

/// Certificate found by extended Euclid in Z or F[x]; nullopt if the
/// elements are not comaximal. Other rings need a supplied certificate.
std::optional<BezoutCertificate> find_bezout(const std::vector<Element>& elements);

/// u, v with s^n u + t^m v = 1, derived from a certificate for {s, t} by
/// expanding (c_s s + c_t t)^{n+m-1}.
BezoutCertificate bezout_for_powers(const BezoutCertificate& st, unsigned n, unsigned m);

}  // namespace picard
