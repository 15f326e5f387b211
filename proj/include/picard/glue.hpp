#pragma once

// Two-chart covers, the equalizer sequence 0 -> A -> A_s x A_t -> A_st, and
// invertible modules glued from a unit of A_st.

#include <optional>
#include <string>
#include <utility>

#include "picard/localization.hpp"
#include "picard/report.hpp"

namespace picard {

class TwoChartCover {
 public:
  /// Uses `bezout` when given (verified), otherwise searches in Z / F[x].
  /// CertificateError when no certificate is available.
  TwoChartCover(Element s, Element t, std::optional<BezoutCertificate> bezout = std::nullopt);

  const Ring& ring() const { return s_.ring(); }
  const Element& s() const { return s_; }
  const Element& t() const { return t_; }
  Element st() const { return s_ * t_; }
  const BezoutCertificate& bezout() const { return bezout_; }

  /// a/s^n viewed in A_st.
  LocalizedElement from_s(const LocalizedElement& x) const;
  LocalizedElement from_t(const LocalizedElement& y) const;
  LocalizedElement in_s(const Element& a, unsigned n = 0) const { return {a, s_, n}; }
  LocalizedElement in_t(const Element& b, unsigned m = 0) const { return {b, t_, m}; }
  LocalizedElement in_st(const Element& c, unsigned k = 0) const { return {c, st(), k}; }

 private:
  Element s_;
  Element t_;
  BezoutCertificate bezout_;
};

/// u, v with s^n u + t^m v = 1.
using PowerBezout = std::pair<Element, Element>;

/// c in A with c = a/s^n in A_s and c = b/t^m in A_t. NotASection when the
/// images in A_st differ (after allowing a factor (st)^p, p <= 8).
Element equalizer_preimage(const TwoChartCover& cover, const LocalizedElement& a_over_sn,
                           const LocalizedElement& b_over_tm, const std::optional<PowerBezout>& uv = std::nullopt);

/// L = {(xi, eta) in A_s x A_t : omega xi = eta in A_st}.
class GluedModule {
 public:
  /// PreconditionError when omega is not a unit of A_st (no inverse given or
  /// found among s^k t^k, k <= 8); a given inverse is verified.
  GluedModule(TwoChartCover cover, LocalizedElement omega, std::optional<LocalizedElement> omega_inverse = std::nullopt);

  const TwoChartCover& cover() const { return cover_; }
  const LocalizedElement& omega() const { return omega_; }
  const LocalizedElement& omega_inverse() const { return omega_inv_; }

  bool member(const LocalizedElement& xi, const LocalizedElement& eta) const;
  /// (1, omega) in A_s x A_st and (omega^{-1}, 1) in A_st x A_t.
  std::pair<LocalizedElement, LocalizedElement> basis_s() const;
  std::pair<LocalizedElement, LocalizedElement> basis_t() const;
  /// The basis identities: omega * 1 = omega and omega * omega^{-1} = 1.
  bool verify_local_bases() const;
  /// Coordinate of (xi, eta') in L_s on (1, omega), i.e. xi, when eta' = omega xi.
  std::optional<LocalizedElement> coordinate_s(const LocalizedElement& xi, const LocalizedElement& eta_st) const;

 private:
  TwoChartCover cover_;
  LocalizedElement omega_;
  LocalizedElement omega_inv_;
};

struct FreenessResult {
  bool free = false;
  std::string failure;  // first failing condition when not free
  std::optional<LocalizedElement> u_inverse;
  std::optional<LocalizedElement> v_inverse;
  /// Global coordinates of the test members (u, v) and (s u, s v).
  std::vector<Element> coordinates;
};

/// True iff u is a unit of A_s, v a unit of A_t and omega u = v in A_st;
/// in that case (u, v) is certified as a basis by recovering the global
/// coordinate of sample members through equalizer_preimage.
FreenessResult glued_freeness(const GluedModule& glued, const LocalizedElement& u, const LocalizedElement& v);

/// Global a with (xi, eta) = a (u, v), when (u, v) is a unit pair.
std::optional<Element> global_coordinate(const GluedModule& glued, const LocalizedElement& u,
                                         const LocalizedElement& v, const LocalizedElement& xi,
                                         const LocalizedElement& eta);

struct GlueSuiteOptions {
  std::uint64_t seed = 0;
  std::size_t preimage_cases = 1000;
  std::size_t freeness_cases = 50;
  int degree = 3;
};
Report glue_suite(const GlueSuiteOptions& opt = {});

}  // namespace picard
