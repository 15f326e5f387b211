#pragma once

// Roots of unity with 1 - t invertible, characters G -> T, and the
// decomposition of an abelian galois cover B = sum_theta L_theta.

#include <cstdint>
#include <optional>
#include <vector>

#include "picard/galois.hpp"

namespace picard {

struct RootData {
  Ring ring;
  Element zeta;
  std::size_t n = 0;
  std::vector<Element> powers;             // zeta^k, k < n
  std::vector<Element> one_minus_inverse;  // (1 - zeta^k)^{-1}; entry 0 unused
  Element n_inverse;
  Json certificate;

  const Element& power(std::size_t k) const { return powers[k % n]; }
};

/// Checks zeta^N = 1, exact order N, units 1 - zeta^k, X^N - 1 = prod (X - zeta^k),
/// N invertible and sum_{j<d} t^j = 0 for t != 1 with t^d = 1, d | N.
/// CertificateError names the failing clause.
RootData check_PN(const Ring& ring, const Element& zeta, std::size_t n);

struct CharacterGroup {
  std::vector<std::size_t> factors;
  std::size_t n = 0;
  FiniteGroup dual;  // chi indexed like abelian(factors)
  /// values[chi][g] = e with chi(g) = zeta^e.
  std::vector<std::vector<std::size_t>> values;

  std::size_t size() const { return values.size(); }
  std::vector<std::size_t> exponents(std::size_t chi) const { return dual.coordinates(chi); }
  std::size_t product(std::size_t a, std::size_t b) const { return dual.mul(a, b); }
  std::size_t inverse(std::size_t a) const { return dual.inverse(a); }
};

/// Characters of Z/d_1 x ... x Z/d_r into T; group elements in the order of
/// FiniteGroup::abelian(factors). PreconditionError unless each d_i | N.
CharacterGroup character_group(const std::vector<std::size_t>& factors, const RootData& roots);

struct VandermondeIso {
  Matrix matrix;
  Element det;
  Matrix inverse;
};
/// (omega^{ij}) for omega = zeta^{N/d}; CertificateError if det is not a unit.
VandermondeIso vandermonde_iso(const RootData& roots, std::size_t d);
/// Evaluation matrix (chi(g)) built as the Kronecker product of the cyclic
/// factors, compared against direct evaluation.
VandermondeIso character_matrix(const CharacterGroup& chars, const RootData& roots);

struct KummerComponent {
  std::vector<std::size_t> theta;  // exponent tuple
  CocycleModule module;
  /// module.generators, thinned to an A-independent set when A is a field.
  std::vector<Element> basis;
};

struct KummerDecomposition {
  CharacterGroup characters;
  std::vector<KummerComponent> components;
  std::optional<Matrix> change;  // columns: generators on the A-basis of B
  std::optional<Element> det;
  std::optional<Matrix> inverse;
  bool reconstructs = false;  // basis of B recovered through the inverse
  bool grading = false;
  std::vector<std::vector<std::size_t>> missing;
  std::size_t generator_count() const;
  bool complete() const { return missing.empty(); }
  bool isomorphism() const { return complete() && inverse.has_value() && reconstructs; }
  Json to_json() const;
};

/// L_theta for each theta : G -> T, where theta(g) g(b) = b, so G acts on L_theta
/// through theta^{-1}. G must come with cyclic factors dividing N.
KummerDecomposition kummer_decomposition(const GroupAction& action, const RootData& roots,
                                         const ModuleSearch& search = {});

struct KummerAlgebra {
  GroupAction action;
  GaloisCoverCheck cover;
  KummerDecomposition decomposition;
  /// L_{theta_k} = A x^k where theta_k(g) = omega^{-k}.
  bool monomial_components = false;
  Json to_json() const;
};
/// B = A[x]/(x^d - t), g^k(x) = omega^k x with omega = zeta^{N/d}.
KummerAlgebra kummer_algebra_free(const RootData& roots, const Element& t, std::size_t d,
                                  const ModuleSearch& search = {});

struct KummerSuiteOptions {
  std::uint64_t seed = 0;
  int degree_bound = 3;
  std::size_t unit_budget = 1000;
  long max_prime = 41;
  std::size_t max_n = 12;
  /// Extra action (abelian group) with roots {"zeta": expr in A, "N": n}.
  std::optional<GroupAction> action;
  std::optional<Json> roots;
};
Report kummer_suite(const KummerSuiteOptions& opt = {});

/// f5-kummer: F_5[x]/(x^4 - 2) with g(x) = 2x.
KummerAlgebra f5_kummer(const ModuleSearch& search = {});

}  // namespace picard
