#pragma once

// Projective modules as images of idempotent matrices.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "picard/hom.hpp"
#include "picard/matrix.hpp"
#include "picard/random.hpp"
#include "picard/report.hpp"

namespace picard {

/// Q[x][y]/(y^2 + x^2 - 1): coordinate ring of the circle.
Ring circle_ring();
/// Q(i)[x][y]/(y^2 + x^2 - 1).
Ring complex_circle_ring();
/// Q[xi][eta]/(eta^2 + xi^2 - 1), target of the squaring map.
Ring squaring_target_ring();
/// Z[y, z][x]/(x^2 - x + yz).
Ring universal_ring();
/// A tower with no variables and no extensions over the given domain.
Ring scalar_ring(const CoeffDomain& dom);

/// Square matrix P with P^2 = P.
class Projector {
 public:
  /// CertificateError unless P^2 = P.
  explicit Projector(Matrix p);
  const Matrix& matrix() const { return p_; }
  const Ring& ring() const { return p_.ring(); }
  std::size_t size() const { return p_.rows(); }

 private:
  Matrix p_;
};

/// A ring homomorphism into a field tower (Q, F_p, or a number layer).
class EvaluationPoint {
 public:
  /// InvalidHomomorphism if a relation of `ring` does not vanish at the point.
  EvaluationPoint(Ring ring, Ring field, const std::map<std::string, std::string>& values);
  /// Point with values in Q (or F_p when the ring lives over F_p).
  static EvaluationPoint rational(const Ring& ring, const std::map<std::string, std::string>& values);
  const RingHom& hom() const { return hom_; }
  const Ring& field() const { return hom_.target(); }

 private:
  RingHom hom_;
};

/// Tr(f) = 1 and det(f) = 0 for a 2x2 matrix. When true, f^2 = f is also
/// checked (it follows from f^2 - Tr(f) f + det(f) = 0).
bool is_rank_one_projector_2x2(const Matrix& f);

/// Q = 1/2 [[1+x, y], [y, 1-x]] over the circle ring.
Projector mobius_projector();
/// f = [[x, z], [y, 1-x]] over the universal ring.
Projector universal_projector();

struct Complement {
  Projector complement;
  bool products_vanish = false;  // P(1-P) = (1-P)P = 0
  bool sums_to_identity = false;
};
Complement complement_decomposition(const Projector& p);

/// g a g^{-1} == b for an invertible g (det a unit), checked as g a == b g.
bool conjugate_by(const Matrix& a, const Matrix& b, const Matrix& g);

std::size_t rank_at_point(const Projector& p, const EvaluationPoint& pt);
std::size_t rank_at_point(const Matrix& m, const EvaluationPoint& pt);

enum class SectionStatus { Established, NotEstablished };

struct SectionCertificate {
  SectionStatus status = SectionStatus::NotEstablished;
  std::vector<Element> x;       // vector of Im(P) with alpha(x) = 1
  std::string identity;         // alpha(a x) = a on a generic a, when established
  std::size_t candidates_tried = 0;
};

struct SearchBudget {
  int degree = 3;
  std::size_t candidates = 1000;
  std::uint64_t seed = 0;
};

/// Splits alpha: Im(P) -> A. With x given, CertificateError unless Px = x and
/// alpha(x) = 1. Without x, candidates P v for small random v are tried.
SectionCertificate split_surjection(const Projector& p, const std::vector<Element>& alpha,
                                    const std::optional<std::vector<Element>>& x, const SearchBudget& budget = {});

/// Kronecker product; idempotent by construction, verified.
Projector tensor_projector(const Projector& p, const Projector& r);
Projector dual_projector(const Projector& p);

/// b / d with b, d in a polynomial ring; d != 0.
struct Fraction {
  Element num;
  Element den;
};

struct PrincipalGenerator {
  Element generator;
  /// generator == sum membership[j] * gens[j].
  std::vector<Element> membership;
  /// gens[j] == quotients[j] * generator.
  std::vector<Element> quotients;
  /// Generators of the ideals {c : c xi_i in A}.
  std::vector<Element> conductors;
};

/// Generator of an invertible ideal I = (gens) in a UFD layer, from forms
/// xi_i with xi_i I in A and a partition sum xi_i x_i = 1 with x_i in I.
/// x_i must be shown to lie in I: either it is a multiple of one generator,
/// or `partition_in_gens[i]` gives x_i as a combination of gens.
PrincipalGenerator principal_generator_in_ufd(const std::vector<Element>& gens, const std::vector<Fraction>& forms,
                                              const std::vector<Element>& partition,
                                              const std::vector<std::vector<Element>>& partition_in_gens = {});

struct UniversalSuiteOptions {
  std::uint64_t seed = 0;
  std::size_t candidates = 500;
  int degree = 2;
  std::size_t points = 50;
};
/// Non-freeness evidence for the image of f over the universal ring.
Report universal_nonfreeness_suite(const UniversalSuiteOptions& opt = {});

}  // namespace picard
