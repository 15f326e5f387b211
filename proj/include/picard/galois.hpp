#pragma once

// Finite groups acting on a tower B over a sub-tower A, cocycles
// theta : G -> B^x and the modules L_theta = {b : theta(g) g(b) = b for all g}.
//
// A is B with some generators removed ("relative" generators); the
// monomials in the relative generators form the A-basis of B.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "picard/hom.hpp"
#include "picard/matrix.hpp"
#include "picard/random.hpp"
#include "picard/report.hpp"
#include "picard/serialize.hpp"

namespace picard {

class FiniteGroup {
 public:
  /// Elements 1, g, g^2, ..., g^{n-1}.
  static FiniteGroup cyclic(std::size_t n, const std::string& gen = "g");
  /// Z/d_1 x ... x Z/d_r; element k has coordinates in mixed radix, named "(e_1,...,e_r)".
  static FiniteGroup abelian(const std::vector<std::size_t>& factors);
  /// Checks identity, closure, associativity and inverses. The identity may sit anywhere.
  static FiniteGroup from_table(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table);

  std::size_t size() const { return names_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t g, std::size_t h) const { return table_[g][h]; }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  const std::string& name(std::size_t g) const { return names_.at(g); }
  std::size_t index(const std::string& name) const;
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  bool is_abelian() const;
  /// Cyclic factor orders when built by cyclic()/abelian(); empty otherwise.
  const std::vector<std::size_t>& factors() const { return factors_; }
  /// Coordinates of g on the cyclic factors.
  std::vector<std::size_t> coordinates(std::size_t g) const;
  /// Order of g.
  std::size_t order(std::size_t g) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> factors_;
};

class GroupAction {
 public:
  /// images[g] gives g on the symbols of B (unlisted symbols are fixed).
  /// Verifies: every map is a ring endomorphism of B, fixes A, the identity
  /// acts trivially and g(h(b)) = (gh)(b) on every symbol.
  static GroupAction create(Ring b, const std::vector<std::string>& relative, FiniteGroup group,
                            const std::vector<std::map<std::string, std::string>>& images);
  static GroupAction create(Ring b, const std::vector<std::string>& relative, FiniteGroup group,
                            std::vector<RingHom> homs);

  const Ring& ring() const { return b_; }
  const Ring& base() const { return a_; }
  const FiniteGroup& group() const { return group_; }
  const std::vector<Element>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  const RingHom& hom(std::size_t g) const { return homs_.at(g); }
  Element apply(std::size_t g, const Element& e) const { return homs_.at(g)(e); }
  const std::vector<std::string>& relative() const { return relative_; }

  /// Coordinates in A on basis().
  std::vector<Element> coordinates(const Element& e) const;
  Element from_coordinates(const std::vector<Element>& coords) const;
  bool in_base(const Element& e) const;
  /// PreconditionError unless in_base.
  Element to_base(const Element& e) const;
  Element from_base(const Element& a) const { return lift(a, b_); }

 private:
  Ring b_, a_;
  std::vector<std::string> relative_;
  std::vector<std::size_t> rel_slots_;
  std::vector<int> rel_degrees_;
  FiniteGroup group_;
  std::vector<RingHom> homs_;
  std::vector<Element> basis_;
};

struct GaloisCoverCheck {
  Matrix rho;                          // rho[g][j] = g(e_j)
  Element det;
  std::optional<Element> det_inverse;
  bool rank_matches = false;           // |G| = rank of B over A
  /// Averages (1/|G|) sum_g g(e_j), checked to lie in A; absent when |G| is not invertible.
  std::optional<bool> invariants_in_base;
  std::vector<Element> averages;
  bool galois() const { return rank_matches && det_inverse.has_value() && invariants_in_base.value_or(true); }
  Json to_json() const;
};
GaloisCoverCheck verify_galois_cover(const GroupAction& action);

struct Cocycle {
  GroupAction action;
  std::vector<Element> theta;      // by group index
  std::vector<Element> theta_inv;

  const Element& operator()(std::size_t g) const { return theta.at(g); }
  Cocycle inverse() const;
  Cocycle operator*(const Cocycle& o) const;
  bool operator==(const Cocycle& o) const { return theta == o.theta; }
  Json to_json() const;
};

/// Checks theta(1) = 1, the units, and theta(gh) = theta(g) g(theta(h)) over G x G.
/// CertificateError names the first failing pair.
Cocycle verify_cocycle(const GroupAction& action, std::vector<Element> theta);
Cocycle verify_cocycle(const GroupAction& action, const std::map<std::string, Element>& theta);
Cocycle trivial_cocycle(const GroupAction& action);
/// theta(g) = u / g(u); PreconditionError when u is not a unit.
Cocycle coboundary(const GroupAction& action, const Element& u);

bool in_cocycle_module(const Cocycle& theta, const Element& b);
/// Basis over the coefficient field of the members whose coordinates have degree <= d,
/// scaled to primitive integral form over Q.
std::vector<Element> members_up_to(const Cocycle& theta, int degree);

struct ModuleSearch {
  int degree_bound = 3;
  std::size_t unit_budget = 1000;
  std::uint64_t seed = 0;
};

struct CocycleModule {
  Cocycle cocycle;
  std::vector<Element> generators;
  int degree = -1;  // coordinate degree where members first appear
  /// x_i in L_{theta^{-1}} with sum generators[i] x_i = 1; this proves the
  /// generators span L_theta and that L_theta is invertible.
  std::optional<std::vector<Element>> dual;
  std::optional<Element> unit_member;  // L_theta is free on it
  std::size_t unit_candidates = 0;
  bool found() const { return !generators.empty(); }
  Json to_json() const;
};
CocycleModule cocycle_module(const Cocycle& theta, const ModuleSearch& search = {});

struct Hilbert90Witness {
  Element u;
  Element sample;
  std::size_t tried = 0;
};
/// u = sum_h theta(h) h(c) for the first sample c giving a unit. B must be a
/// field tower. CertificateError when every resolvent vanishes.
Hilbert90Witness hilbert90_witness(const Cocycle& theta, const std::vector<Element>& samples);
/// Basis monomials of B, then random elements.
std::vector<Element> field_samples(const GroupAction& action, Random& rng, std::size_t count);

/// V = prod_{i<j} (X_j - X_i) over the variables of the ring.
Element vandermonde_product(const Ring& r);
/// Q with P = V Q. PreconditionError when P is not alternating; CertificateError
/// when the division fails or Q is not symmetric.
Element signature_divide(const Element& p);

/// B = A[T]/prod_g (T - c_g) with (g b)(g') = b(g' g), c_g = 0, 1, ..., |G|-1.
GroupAction product_cover(const Ring& a, const FiniteGroup& group);
/// Q(i)[x][y]/(y^2 + x^2 - 1) over Q[x][y]/(...), conjugation of i.
GroupAction complex_circle_action();
/// Q(i) over Q.
GroupAction gaussian_action();
/// F_25 = F_5[w]/(w^2 - 2) over F_5 with Frobenius w -> -w.
GroupAction f25_action();
/// Q[s1, s2][X2]/(X2^2 - s1 X2 + s2) with X2 -> s1 - X2 (X1 = s1 - X2).
GroupAction symmetric_action();

/// {"ring": ..., "relative": [...], "group": {"cyclic": n} | {"abelian": [...]} |
///  {"elements": [...], "table": [[...]]}, "action": {"g": {"sym": "expr"}}}
GroupAction action_from_json(const Json& j);
Json action_to_json(const GroupAction& a);
/// {"g": "expr", ...}; unlisted elements get 1.
Cocycle cocycle_from_json(const GroupAction& a, const Json& j);

struct GaloisSuiteOptions {
  std::uint64_t seed = 0;
  std::size_t hilbert_cases = 20;
  std::size_t signature_cases = 100;
  int degree_bound = 3;
  std::size_t unit_budget = 1000;
  /// Extra action and cocycle to analyse.
  std::optional<GroupAction> action;
  std::optional<Json> cocycle;
};
Report galois_suite(const GaloisSuiteOptions& opt = {});

}  // namespace picard
