#pragma once

// Exact arithmetic in ring towers
//
//   coefficient domain (Z, Q or F_p)
//     -> polynomial ring in named variables
//       -> nested monogenic monic extensions g_k with relation m_k(g_k) = 0.
//
// A number-layer base ring Q[w]/(m(w)) is stored as the lowest generator of the
// tower; its relation only has scalar coefficients, so it commutes with every
// variable and the normal form is the same as if it sat below the variables.
//
// Elements are kept fully reduced: every generator exponent e_k satisfies
// 0 <= e_k < deg m_k, and no zero coefficient is stored. Equality of elements
// is equality of their term maps.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "picard/scalar.hpp"

namespace picard {

/// Exponent vector laid out as [variables..., generators...].
using Exponents = std::vector<int>;

/// Graded lexicographic order on the variable part, ties broken
/// lexicographically on the generator part. "Less" means "smaller".
struct MonomialOrder {
  std::size_t nvars = 0;
  bool operator()(const Exponents& a, const Exponents& b) const;
};

using TermMap = std::map<Exponents, Scalar, MonomialOrder>;

class RingTower;
using Ring = std::shared_ptr<const RingTower>;
class Element;

struct Generator {
  std::string name;
  int degree = 1;
  /// m(T) = T^degree + sum_i tail[i] T^i, tail[i] in the layer below.
  std::vector<TermMap> tail;
  /// True for the number-layer generator of the base ring.
  bool base_layer = false;
};

/// Input description of a tower. Relations are expression strings in the
/// generator's own name, e.g. {"y", "y^2 + x^2 - 1"}.
struct TowerSpec {
  CoeffDomain coeff = CoeffDomain::rationals();
  std::optional<std::pair<std::string, std::string>> base_generator;
  std::vector<std::string> vars;
  std::vector<std::pair<std::string, std::string>> extensions;
  /// Quadratic relations with scalar coefficients are rejected when they
  /// split. Product rings such as A[T]/(T(T-1)) need this switched off.
  bool check_domain = true;
};

class RingTower : public std::enable_shared_from_this<RingTower> {
 public:
  static Ring create(const TowerSpec& spec);

  const CoeffDomain& coeff() const { return coeff_; }
  std::size_t nvars() const { return vars_.size(); }
  std::size_t ngens() const { return gens_.size(); }
  std::size_t width() const { return vars_.size() + gens_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Generator>& gens() const { return gens_; }
  const Generator& gen(std::size_t k) const { return gens_.at(k); }
  bool has_base_generator() const { return !gens_.empty() && gens_.front().base_layer; }
  const TowerSpec& spec() const { return spec_; }

  std::optional<std::size_t> var_index(std::string_view name) const;
  std::optional<std::size_t> gen_index(std::string_view name) const;
  /// Slot of a symbol in the exponent vector.
  std::optional<std::size_t> symbol_slot(std::string_view name) const;
  std::string slot_name(std::size_t slot) const;
  /// True when there are neither variables nor polynomial-layer generators,
  /// and the coefficient domain is a field: the tower is then a field
  /// provided its relations are irreducible.
  bool is_field_tower() const;
  /// Product of generator degrees: rank over the polynomial layer.
  std::size_t rank_over_polynomials() const;

  TermMap empty_terms() const { return TermMap(MonomialOrder{nvars()}); }
  Exponents unit_exponents() const { return Exponents(width(), 0); }

  Element zero() const;
  Element one() const;
  Element constant(const Scalar& q) const;
  Element sym(std::string_view name) const;
  /// normal_form of an expression over the tower's symbols.
  Element parse(std::string_view text) const;

  /// Structural equality (same domain, names and relations).
  bool operator==(const RingTower& other) const;
  std::string describe() const;

  /// Internal: product of reduced term maps, reduced.
  TermMap multiply(const TermMap& a, const TermMap& b) const;
  void add_into(TermMap& dst, const TermMap& src, const Scalar& factor = 1) const;

 private:
  RingTower() = default;

  CoeffDomain coeff_;
  std::vector<std::string> vars_;
  std::vector<Generator> gens_;
  TowerSpec spec_;

  TermMap multiply_level(const TermMap& a, const TermMap& b, std::size_t level) const;
  TermMap multiply_plain(const TermMap& a, const TermMap& b) const;
  friend class TowerBuilder;
};

bool same_ring(const Ring& a, const Ring& b);

class Element {
 public:
  Element() = default;
  explicit Element(Ring ring);
  Element(Ring ring, TermMap terms);

  static Element constant(Ring ring, const Scalar& q);
  static Element symbol(Ring ring, std::string_view name);
  static Element monomial(Ring ring, Exponents exps, const Scalar& coeff = 1);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool valid() const { return ring_ != nullptr; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::optional<Scalar> constant_value() const;
  bool is_constant() const { return constant_value().has_value(); }

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Element& o);
  Element& operator*=(const Scalar& q);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(Element a, const Scalar& q) { return a *= q; }
  friend Element operator*(const Scalar& q, Element a) { return a *= q; }
  Element operator+(const Scalar& q) const;
  Element operator-(const Scalar& q) const;
  friend Element operator+(const Scalar& q, const Element& a) { return a + q; }
  friend Element operator-(const Scalar& q, const Element& a) { return -a + q; }
  Element pow(unsigned n) const;

  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

  /// Highest generator index with a positive exponent, if any.
  std::optional<std::size_t> top_generator() const;
  bool involves_slot(std::size_t slot) const;
  /// Total degree in the variables only.
  int var_degree() const;
  /// Degree in one variable.
  int degree_in_var(std::size_t var) const;
  /// Total degree counting variables and generators.
  int total_degree() const;
  /// Leading (largest) term; precondition: non-zero.
  const std::pair<const Exponents, Scalar>& leading_term() const { return *terms_.rbegin(); }

  std::string to_string() const;

 private:
  Ring ring_;
  TermMap terms_;
  void require_same(const Element& o) const;
};

std::ostream& operator<<(std::ostream& os, const Element& e);

/// Coefficients of e as a polynomial in generator k, indexed by exponent.
std::vector<Element> split_by_generator(const Element& e, std::size_t k);
/// Inverse of split_by_generator: sum coeffs[j] * g_k^j. Coefficients must not involve g_k.
Element join_by_generator(const Ring& ring, const std::vector<Element>& coeffs, std::size_t k);
/// Coefficients of e as a polynomial in variable v.
std::vector<Element> split_by_var(const Element& e, std::size_t v);
Element join_by_var(const Ring& ring, const std::vector<Element>& coeffs, std::size_t v);

/// Re-expresses e in a tower that carries (at least) the same symbol names,
/// matched by name. Scalars are normalized into the target domain.
Element lift(const Element& e, const Ring& target);

/// New tower with extra free variables appended after the existing ones.
Ring adjoin_vars(const Ring& ring, const std::vector<std::string>& names);
/// New tower with one more monic extension on top.
Ring adjoin_extension(const Ring& ring, const std::string& name, const std::string& relation,
                      bool check_domain = true);

}  // namespace picard
