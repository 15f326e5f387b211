#pragma once

// Binary quadratic forms aX^2 + 2bXY + cY^2 over a ring R and the module
// L = R^2 over A = R[T]/(T^2 - D), D = b^2 - ac, where T acts as
// f = [[-b, -c], [a, b]].

#include <cstdint>
#include <optional>
#include <vector>

#include "picard/localization.hpp"
#include "picard/matrix.hpp"
#include "picard/report.hpp"
#include "picard/serialize.hpp"

namespace picard {

struct BinaryQuadraticForm {
  Ring ring;
  Element a, b, c;  // b is half the XY coefficient

  static BinaryQuadraticForm parse(Ring ring, const std::string& a, const std::string& b, const std::string& c);
  Element discriminant() const { return b * b - a * c; }
  Element operator()(const Element& x, const Element& y) const;
  bool operator==(const BinaryQuadraticForm& o) const { return a == o.a && b == o.b && c == o.c; }
  std::string to_string() const;
};

Json form_to_json(const BinaryQuadraticForm& f);
/// {"a": .., "b": .., "c": ..} with elements as expressions or term lists.
BinaryQuadraticForm form_from_json(const Ring& ring, const Json& j);

struct QFModule {
  BinaryQuadraticForm form;
  Ring algebra;  // R[T]/(T^2 - D)
  Matrix f;

  Element sqrt_d() const;
  /// Matrix of z -> w z on L for w = p + q T in the algebra.
  Matrix action(const Element& w) const;
  /// w from its coordinates p, q in R.
  Element element(const Element& p, const Element& q) const;
  /// (p, q) with w = p + q T.
  std::pair<Element, Element> coordinates(const Element& w) const;
};

/// Builds A and f; verifies f^2 = D Id and F(X, Y) = det [[X, -bX-cY], [Y, aX+bY]]
/// on fresh variables.
QFModule module_from_form(const BinaryQuadraticForm& form);

/// F(x, y), checked against the determinant of w -> w z on the bases {1, T} and e1, e2.
Element evaluate_form_det(const BinaryQuadraticForm& form, const Element& x, const Element& y);

struct BasisTest {
  bool basis = false;
  Element value;                  // F(x, y)
  std::optional<Matrix> change;   // columns z, T z
  std::optional<Matrix> inverse;
};
/// z = (x, y) is an A-basis of L iff F(z) is a unit of R.
BasisTest basis_test(const QFModule& m, const Element& x, const Element& y);

struct LocalChart {
  Element denominator;  // chart R_denominator (1 for a global chart)
  Element x, y;
  Element value;        // F(x, y), a unit in the chart
  Matrix change;
  /// change^{-1} = adjugate / value in the chart.
  Matrix adjugate;
};

struct PrimitiveCharts {
  bool global = false;
  BezoutCertificate form_certificate;  // for {a, 2b, c}
  BezoutCertificate cover;             // for {a, a + 2b + c, c}
  std::vector<LocalChart> charts;
};
/// Trivializations of L over a cover of Spec R. CertificateError when
/// {a, 2b, c} carries no certificate (not properly primitive or not searchable).
PrimitiveCharts properly_primitive_local_bases(const BinaryQuadraticForm& form,
                                               std::optional<BezoutCertificate> cert = std::nullopt);

/// Form X, Y -> coefficient of e1 ^ e2 in z ^ t z for the matrix [[alpha, gamma], [beta, delta]]
/// of z -> t z. The middle coefficient delta - alpha must be divisible by 2.
BinaryQuadraticForm nu_from_basis(const Matrix& t_matrix);

/// Z[T]/(T^2 - D).
Ring pell_ring(long d);
/// All p + qT with |p|, |q| <= bound and p^2 - D q^2 = 1, sorted by (p, q); +-1 even for bound 0.
std::vector<Element> pell_units(long d, long bound);

/// The w in A with u = multiplication by w. Needs det u = 1 and F o u = F;
/// 2 must be cancellable in R. Throws PreconditionError / CertificateError naming the failure.
Element automorphism_to_scalar(const QFModule& m, const Matrix& u);

struct QFormSuiteOptions {
  std::uint64_t seed = 0;
  std::size_t forms = 100;
  std::size_t actions = 20;
  long pell_bound = 50;
  int degree = 2;
  /// Extra form to replay (round trip, charts, basis criterion).
  std::optional<BinaryQuadraticForm> form;
};
Report qform_suite(const QFormSuiteOptions& opt = {});

}  // namespace picard
