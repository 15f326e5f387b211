#include "picard/galois.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "picard/arith.hpp"
#include "picard/errors.hpp"
#include "picard/linear.hpp"
#include "picard/projective.hpp"

namespace picard {

// ---------------------------------------------------------------- groups

FiniteGroup FiniteGroup::cyclic(std::size_t n, const std::string& gen) {
  if (n == 0) throw PresentationError("cyclic group of order 0");
  FiniteGroup g;
  for (std::size_t k = 0; k < n; ++k) g.names_.push_back(k == 0 ? "1" : k == 1 ? gen : gen + "^" + std::to_string(k));
  g.table_.assign(n, std::vector<std::size_t>(n));
  g.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g.table_[a][b] = (a + b) % n;
    g.inverse_[a] = (n - a) % n;
  }
  g.factors_ = {n};
  return g;
}

FiniteGroup FiniteGroup::abelian(const std::vector<std::size_t>& factors) {
  std::size_t n = 1;
  for (auto d : factors) {
    if (d == 0) throw PresentationError("cyclic factor of order 0");
    n *= d;
  }
  FiniteGroup g;
  g.factors_ = factors;
  auto digits = [&](std::size_t k) {
    std::vector<std::size_t> e(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      e[i] = k % factors[i];
      k /= factors[i];
    }
    return e;
  };
  auto index = [&](const std::vector<std::size_t>& e) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) k = k * factors[i] + e[i];
    return k;
  };
  for (std::size_t k = 0; k < n; ++k) {
    auto e = digits(k);
    std::string name = "(";
    for (std::size_t i = 0; i < e.size(); ++i) name += (i ? "," : "") + std::to_string(e[i]);
    g.names_.push_back(factors.empty() ? "1" : name + ")");
  }
  g.table_.assign(n, std::vector<std::size_t>(n));
  g.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto ea = digits(a);
    std::vector<std::size_t> inv(ea.size());
    for (std::size_t i = 0; i < ea.size(); ++i) inv[i] = (factors[i] - ea[i]) % factors[i];
    g.inverse_[a] = index(inv);
    for (std::size_t b = 0; b < n; ++b) {
      auto eb = digits(b);
      for (std::size_t i = 0; i < ea.size(); ++i) eb[i] = (ea[i] + eb[i]) % factors[i];
      g.table_[a][b] = index(eb);
    }
  }
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table) {
  const std::size_t n = names.size();
  if (n == 0) throw PresentationError("group: empty element list");
  if (std::set<std::string>(names.begin(), names.end()).size() != n) throw PresentationError("group: repeated element name");
  if (table.size() != n) throw PresentationError("group: table has " + std::to_string(table.size()) + " rows, expected " + std::to_string(n));
  for (const auto& row : table) {
    if (row.size() != n) throw PresentationError("group: table row of wrong length");
    for (auto v : row)
      if (v >= n) throw PresentationError("group: table entry " + std::to_string(v) + " out of range");
  }
  FiniteGroup g;
  g.names_ = std::move(names);
  g.table_ = std::move(table);
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t h = 0; h < n && ok; ++h) ok = g.table_[e][h] == h && g.table_[h][e] == h;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw PresentationError("group: no identity element");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.table_[g.table_[a][b]][c] != g.table_[a][g.table_[b][c]])
          throw PresentationError("group: not associative at (" + g.names_[a] + ", " + g.names_[b] + ", " + g.names_[c] + ")");
  g.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t b = 0;
    while (b < n && g.table_[a][b] != g.identity_) ++b;
    if (b == n || g.table_[b][a] != g.identity_) throw PresentationError("group: " + g.names_[a] + " has no inverse");
    g.inverse_[a] = b;
  }
  return g;
}

std::size_t FiniteGroup::index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw PresentationError("unknown group element '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

std::vector<std::size_t> FiniteGroup::coordinates(std::size_t g) const {
  if (factors_.empty() && size() > 1) throw PreconditionError("group has no cyclic factor data");
  std::vector<std::size_t> e(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    e[i] = g % factors_[i];
    g /= factors_[i];
  }
  return e;
}

std::size_t FiniteGroup::order(std::size_t g) const {
  std::size_t k = 1;
  for (std::size_t x = g; x != identity_; x = mul(x, g)) ++k;
  return k;
}

// ---------------------------------------------------------------- actions

GroupAction GroupAction::create(Ring b, const std::vector<std::string>& relative, FiniteGroup group,
                                const std::vector<std::map<std::string, std::string>>& images) {
  if (images.size() != group.size())
    throw PresentationError("action: " + std::to_string(images.size()) + " maps for a group of order " + std::to_string(group.size()));
  std::vector<RingHom> homs;
  for (const auto& im : images) homs.push_back(RingHom::from_strings(b, b, im));
  return create(std::move(b), relative, std::move(group), std::move(homs));
}

GroupAction GroupAction::create(Ring b, const std::vector<std::string>& relative, FiniteGroup group,
                                std::vector<RingHom> homs) {
  GroupAction out;
  out.b_ = b;
  out.relative_ = relative;
  out.group_ = std::move(group);
  TowerSpec spec = b->spec();
  for (const auto& name : relative) {
    auto k = b->gen_index(name);
    if (!k) throw PresentationError("relative generator '" + name + "' is not a generator of the ring");
    out.rel_slots_.push_back(b->nvars() + *k);
    out.rel_degrees_.push_back(b->gen(*k).degree);
    if (spec.base_generator && spec.base_generator->first == name) spec.base_generator.reset();
    std::erase_if(spec.extensions, [&](const auto& e) { return e.first == name; });
  }
  out.a_ = RingTower::create(spec);

  std::size_t d = 1;
  for (int deg : out.rel_degrees_) d *= static_cast<std::size_t>(deg);
  for (std::size_t k = 0; k < d; ++k) {
    Exponents e = b->unit_exponents();
    std::size_t r = k;
    for (std::size_t i = out.rel_slots_.size(); i-- > 0;) {
      e[out.rel_slots_[i]] = static_cast<int>(r % out.rel_degrees_[i]);
      r /= out.rel_degrees_[i];
    }
    out.basis_.push_back(Element::monomial(b, std::move(e)));
  }

  const FiniteGroup& g = out.group_;
  if (homs.size() != g.size())
    throw PresentationError("action: " + std::to_string(homs.size()) + " maps for a group of order " + std::to_string(g.size()));
  for (std::size_t k = 0; k < homs.size(); ++k) {
    if (!same_ring(homs[k].source(), b) || !same_ring(homs[k].target(), b))
      throw RingMismatch("action of " + g.name(k) + " is not an endomorphism of the ring");
    for (std::size_t s = 0; s < b->width(); ++s) {
      if (std::find(out.rel_slots_.begin(), out.rel_slots_.end(), s) != out.rel_slots_.end()) continue;
      if (homs[k].image_of_slot(s) != b->sym(b->slot_name(s)))
        throw InvalidHomomorphism(g.name(k) + " moves the base symbol '" + b->slot_name(s) + "'");
    }
  }
  if (!homs[g.identity()].same_images(RingHom::identity(b)))
    throw InvalidHomomorphism("the identity element acts non-trivially");
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y)
      if (!homs[x].after(homs[y]).same_images(homs[g.mul(x, y)]))
        throw InvalidHomomorphism("group law fails: " + g.name(x) + "(" + g.name(y) + "(b)) != (" + g.name(x) + " " +
                                  g.name(y) + ")(b)");
  out.homs_ = std::move(homs);
  return out;
}

std::vector<Element> GroupAction::coordinates(const Element& e) const {
  if (!same_ring(e.ring(), b_)) throw RingMismatch("coordinates: element not in the acted-on ring");
  std::vector<TermMap> parts(basis_.size(), a_->empty_terms());
  // B slot -> A slot (relative slots dropped).
  std::vector<std::optional<std::size_t>> to_a(b_->width());
  for (std::size_t s = 0; s < b_->width(); ++s) to_a[s] = a_->symbol_slot(b_->slot_name(s));
  for (const auto& [ex, c] : e.terms()) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < rel_slots_.size(); ++i) k = k * rel_degrees_[i] + static_cast<std::size_t>(ex[rel_slots_[i]]);
    Exponents f = a_->unit_exponents();
    for (std::size_t s = 0; s < ex.size(); ++s)
      if (to_a[s]) f[*to_a[s]] = ex[s];
    parts[k].emplace(std::move(f), c);
  }
  std::vector<Element> out;
  for (auto& t : parts) out.emplace_back(a_, std::move(t));
  return out;
}

Element GroupAction::from_coordinates(const std::vector<Element>& coords) const {
  Element out = b_->zero();
  for (std::size_t j = 0; j < coords.size() && j < basis_.size(); ++j) out += lift(coords[j], b_) * basis_[j];
  return out;
}

bool GroupAction::in_base(const Element& e) const {
  for (const auto& [ex, c] : e.terms())
    for (auto s : rel_slots_)
      if (ex[s] != 0) return false;
  return true;
}

Element GroupAction::to_base(const Element& e) const {
  if (!in_base(e)) throw PreconditionError("element " + e.to_string() + " is not in the base ring");
  return coordinates(e)[0];
}

// ---------------------------------------------------------------- covers

Json GaloisCoverCheck::to_json() const {
  Json j{{"rho", matrix_to_json(rho)}, {"det", det.to_string()}, {"det_is_unit", det_inverse.has_value()}};
  if (det_inverse) j["det_inverse"] = det_inverse->to_string();
  j["rank_matches_order"] = rank_matches;
  if (invariants_in_base) {
    j["invariants_in_base"] = *invariants_in_base;
    Json av = Json::array();
    for (const auto& a : averages) av.push_back(a.to_string());
    j["averages"] = av;
  } else {
    j["invariants_in_base"] = "not checked: |G| not invertible";
  }
  j["galois"] = galois();
  return j;
}

GaloisCoverCheck verify_galois_cover(const GroupAction& action) {
  GaloisCoverCheck out;
  const auto& g = action.group();
  const auto& basis = action.basis();
  const Ring& b = action.ring();
  out.rank_matches = g.size() == basis.size();
  out.rho = Matrix(b, g.size(), basis.size());
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t j = 0; j < basis.size(); ++j) out.rho(x, j) = action.apply(x, basis[j]);
  out.det = out.rank_matches ? out.rho.determinant() : b->zero();
  out.det_inverse = inverse(out.det);
  const CoeffDomain& dom = b->coeff();
  Scalar order(static_cast<long>(g.size()));
  if (dom.is_unit(dom.normalize(order))) {
    Scalar inv = dom.inverse(dom.normalize(order));
    bool ok = true;
    for (const auto& e : basis) {
      Element s = b->zero();
      for (std::size_t x = 0; x < g.size(); ++x) s += action.apply(x, e);
      s *= inv;
      ok = ok && action.in_base(s);
      out.averages.push_back(s);
    }
    out.invariants_in_base = ok;
  }
  return out;
}

// ---------------------------------------------------------------- cocycles

Cocycle Cocycle::inverse() const { return {action, theta_inv, theta}; }

Cocycle Cocycle::operator*(const Cocycle& o) const {
  Cocycle out{action, {}, {}};
  for (std::size_t g = 0; g < theta.size(); ++g) {
    out.theta.push_back(theta[g] * o.theta[g]);
    out.theta_inv.push_back(theta_inv[g] * o.theta_inv[g]);
  }
  return out;
}

Json Cocycle::to_json() const {
  Json j = Json::object();
  for (std::size_t g = 0; g < theta.size(); ++g) j[action.group().name(g)] = theta[g].to_string();
  return j;
}

Cocycle verify_cocycle(const GroupAction& action, std::vector<Element> theta) {
  const auto& g = action.group();
  if (theta.size() != g.size()) throw PreconditionError("cocycle: one value per group element expected");
  for (const auto& t : theta)
    if (!same_ring(t.ring(), action.ring())) throw RingMismatch("cocycle value outside the acted-on ring");
  if (!theta[g.identity()].is_one()) throw CertificateError("theta(1) = " + theta[g.identity()].to_string() + " != 1");
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y) {
      Element rhs = theta[x] * action.apply(x, theta[y]);
      if (theta[g.mul(x, y)] != rhs)
        throw CertificateError("cocycle condition fails at (" + g.name(x) + ", " + g.name(y) + "): theta(gh) = " +
                               theta[g.mul(x, y)].to_string() + " but theta(g) g(theta(h)) = " + rhs.to_string());
    }
  // (C) at (g, g^{-1}) gives theta(g) g(theta(g^{-1})) = 1.
  std::vector<Element> inv;
  for (std::size_t x = 0; x < g.size(); ++x) inv.push_back(action.apply(x, theta[g.inverse(x)]));
  return {action, std::move(theta), std::move(inv)};
}

Cocycle verify_cocycle(const GroupAction& action, const std::map<std::string, Element>& theta) {
  std::vector<Element> v(action.group().size(), action.ring()->one());
  for (const auto& [name, e] : theta) v[action.group().index(name)] = e;
  return verify_cocycle(action, std::move(v));
}

Cocycle trivial_cocycle(const GroupAction& action) {
  return verify_cocycle(action, std::vector<Element>(action.group().size(), action.ring()->one()));
}

Cocycle coboundary(const GroupAction& action, const Element& u) {
  auto inv = inverse(u);
  if (!inv) throw PreconditionError("coboundary: u = " + u.to_string() + " is not a unit");
  std::vector<Element> theta;
  for (std::size_t x = 0; x < action.group().size(); ++x) theta.push_back(u * action.apply(x, *inv));
  return verify_cocycle(action, std::move(theta));
}

bool in_cocycle_module(const Cocycle& theta, const Element& b) {
  for (std::size_t x = 0; x < theta.theta.size(); ++x)
    if (theta(x) * theta.action.apply(x, b) != b) return false;
  return true;
}

namespace {

// Primitive integral multiple over Q / Z; unchanged over F_p.
Element primitive(const Element& e) {
  if (e.ring()->coeff().kind == CoeffKind::PrimeField || e.is_zero()) return e;
  mpz_class den = 1, num = 0;
  for (const auto& [ex, c] : e.terms()) den = lcm(den, c.get_den());
  for (const auto& [ex, c] : e.terms()) num = gcd(num, mpz_class(c * den));
  Scalar k(den, num);
  k.canonicalize();
  if (e.leading_term().second < 0) k = -k;
  return e * k;
}

}  // namespace

std::vector<Element> members_up_to(const Cocycle& theta, int degree) {
  const GroupAction& act = theta.action;
  const Ring& b = act.ring();
  auto mons = monomials_up_to(act.base(), degree);
  std::vector<Element> unknowns;
  for (const auto& e : act.basis())
    for (const auto& m : mons) unknowns.push_back(act.from_base(m) * e);

  // Rows indexed by (group element, monomial of B).
  std::map<std::pair<std::size_t, Exponents>, std::size_t> rows;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols;
  for (const auto& u : unknowns) {
    std::vector<std::pair<std::size_t, Scalar>> col;
    for (std::size_t x = 0; x < act.group().size(); ++x) {
      if (x == act.group().identity()) continue;
      Element r = theta(x) * act.apply(x, u) - u;
      for (const auto& [ex, c] : r.terms()) {
        auto key = std::make_pair(x, ex);
        auto it = rows.find(key);
        if (it == rows.end()) it = rows.emplace(key, rows.size()).first;
        col.emplace_back(it->second, c);
      }
    }
    cols.push_back(std::move(col));
  }
  std::vector<ScalarRow> m(rows.size(), ScalarRow(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, c] : cols[j]) m[i][j] = c;
  std::vector<Element> out;
  for (const auto& v : nullspace(std::move(m), cols.size(), b->coeff())) {
    // Clear denominators first so the element exists over Z towers too.
    mpz_class den = 1;
    for (const auto& c : v) den = lcm(den, c.get_den());
    Element e = b->zero();
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) e += unknowns[j] * (b->coeff().kind == CoeffKind::PrimeField ? v[j] : Scalar(v[j] * den));
    out.push_back(primitive(e));
  }
  return out;
}

Json CocycleModule::to_json() const {
  Json gens = Json::array();
  for (const auto& g : generators) gens.push_back(g.to_string());
  Json j{{"theta", cocycle.to_json()}, {"generators", gens}, {"degree", degree}};
  if (dual) {
    Json d = Json::array();
    for (const auto& x : *dual) d.push_back(x.to_string());
    j["dual"] = d;
  } else {
    j["dual"] = nullptr;
  }
  j["free"] = unit_member.has_value();
  if (unit_member) j["unit_member"] = unit_member->to_string();
  j["unit_candidates"] = unit_candidates;
  return j;
}

CocycleModule cocycle_module(const Cocycle& theta, const ModuleSearch& search) {
  const GroupAction& act = theta.action;
  CocycleModule out{theta, {}, -1, std::nullopt, std::nullopt, 0};
  Cocycle inv = theta.inverse();
  for (int d = 0; d <= search.degree_bound; ++d) {
    auto k = members_up_to(theta, d);
    if (k.empty()) continue;
    if (out.degree < 0) out.degree = d;
    out.generators = k;
    auto kd = members_up_to(inv, d);
    if (kd.empty()) continue;
    std::vector<Element> products;
    for (const auto& x : k)
      for (const auto& y : kd) {
        Element p = x * y;
        if (!act.in_base(p)) throw CertificateError("L_theta L_theta^-1 is not invariant: " + p.to_string());
        products.push_back(act.to_base(p));
      }
    auto lam = bounded_combination(products, act.base()->one(), d);
    if (!lam) continue;
    std::vector<Element> dual;
    Element total = act.ring()->zero();
    for (std::size_t i = 0; i < k.size(); ++i) {
      Element x = act.ring()->zero();
      for (std::size_t j = 0; j < kd.size(); ++j) x += act.from_base((*lam)[i * kd.size() + j]) * kd[j];
      total += k[i] * x;
      dual.push_back(std::move(x));
    }
    if (!total.is_one()) throw CertificateError("surjectivity certificate does not sum to 1");
    out.dual = std::move(dual);
    break;
  }
  if (!out.found()) return out;

  // Freeness: a unit of B inside L_theta.
  for (const auto& g : out.generators) {
    if (out.unit_candidates >= search.unit_budget) break;
    ++out.unit_candidates;
    if (is_unit(g)) {
      out.unit_member = g;
      return out;
    }
  }
  auto pool = members_up_to(theta, search.degree_bound);
  Random rng(search.seed);
  const CoeffDomain& dom = act.ring()->coeff();
  while (out.unit_candidates < search.unit_budget && !pool.empty()) {
    Element c = act.ring()->zero();
    for (const auto& p : pool) c += p * dom.normalize(rng.uniform(-3, 3));
    ++out.unit_candidates;
    if (!c.is_zero() && is_unit(c)) {
      out.unit_member = c;
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------- Hilbert 90

Hilbert90Witness hilbert90_witness(const Cocycle& theta, const std::vector<Element>& samples) {
  const GroupAction& act = theta.action;
  if (!act.ring()->is_field_tower()) throw PreconditionError("Hilbert 90 needs a field tower");
  std::size_t tried = 0;
  for (const auto& c : samples) {
    ++tried;
    Element u = act.ring()->zero();
    for (std::size_t h = 0; h < act.group().size(); ++h) u += theta(h) * act.apply(h, c);
    if (u.is_zero() || !is_unit(u)) continue;
    if (!in_cocycle_module(theta, u)) throw CertificateError("resolvent fails theta(g) g(u) = u");
    return {u, c, tried};
  }
  throw CertificateError("all " + std::to_string(tried) + " resolvents vanish; retry with more samples");
}

std::vector<Element> field_samples(const GroupAction& action, Random& rng, std::size_t count) {
  std::vector<Element> out = action.basis();
  RandomShape shape;
  shape.fractions = true;
  while (out.size() < count) out.push_back(random_element(rng, action.ring(), shape));
  return out;
}

// ---------------------------------------------------------------- signature

Element vandermonde_product(const Ring& r) {
  Element v = r->one();
  for (std::size_t i = 0; i < r->nvars(); ++i)
    for (std::size_t j = i + 1; j < r->nvars(); ++j) v *= r->sym(r->vars()[j]) - r->sym(r->vars()[i]);
  return v;
}

Element signature_divide(const Element& p) {
  const Ring& r = p.ring();
  if (r->ngens() != 0) throw PreconditionError("signature_divide: polynomial ring expected");
  if (r->coeff().characteristic() == 2) throw PreconditionError("signature_divide: characteristic 2");
  const auto& vars = r->vars();
  std::vector<RingHom> swaps;
  for (std::size_t i = 0; i + 1 < vars.size(); ++i)
    swaps.emplace_back(r, r, std::map<std::string, Element>{{vars[i], r->sym(vars[i + 1])}, {vars[i + 1], r->sym(vars[i])}});
  for (std::size_t i = 0; i < swaps.size(); ++i)
    if (swaps[i](p) != -p)
      throw PreconditionError("P is not alternating: swapping " + vars[i] + " and " + vars[i + 1] + " does not negate it");
  auto q = try_divide(p, vandermonde_product(r));
  if (!q) throw CertificateError("P is not divisible by the Vandermonde product");
  for (const auto& s : swaps)
    if (s(*q) != *q) throw CertificateError("quotient " + q->to_string() + " is not symmetric");
  return *q;
}

// ---------------------------------------------------------------- instances

GroupAction product_cover(const Ring& a, const FiniteGroup& group) {
  const std::size_t d = group.size();
  std::string t = "T";
  while (a->symbol_slot(t)) t += "_";
  std::string rel;
  for (std::size_t k = 0; k < d; ++k) rel += (k ? "*" : "") + std::string("(") + t + " - " + std::to_string(k) + ")";
  Ring b = adjoin_extension(a, t, rel, false);
  Element tt = b->sym(t);
  // Lagrange idempotents L_h(T) = prod_{k != h} (T - k) / (h - k).
  std::vector<Element> idem;
  for (std::size_t h = 0; h < d; ++h) {
    Element l = b->one();
    for (std::size_t k = 0; k < d; ++k)
      if (k != h) l *= (tt - Scalar(static_cast<long>(k))) * Scalar(Scalar(1) / (static_cast<long>(h) - static_cast<long>(k)));
    idem.push_back(l);
  }
  std::vector<RingHom> homs;
  for (std::size_t g = 0; g < d; ++g) {
    // (g T)(h) = T(h g) = c_{hg}.
    Element img = b->zero();
    for (std::size_t h = 0; h < d; ++h) img += idem[h] * Scalar(static_cast<long>(group.mul(h, g)));
    homs.emplace_back(b, b, std::map<std::string, Element>{{t, img}});
  }
  return GroupAction::create(b, {t}, group, std::move(homs));
}

GroupAction complex_circle_action() {
  return GroupAction::create(complex_circle_ring(), {"i"}, FiniteGroup::cyclic(2, "s"), {{}, {{"i", "-i"}}});
}

GroupAction gaussian_action() {
  TowerSpec spec;
  spec.base_generator = {"i", "i^2 + 1"};
  return GroupAction::create(RingTower::create(spec), {"i"}, FiniteGroup::cyclic(2, "s"), {{}, {{"i", "-i"}}});
}

GroupAction f25_action() {
  TowerSpec spec;
  spec.coeff = CoeffDomain::prime_field(5);
  spec.extensions = {{"w", "w^2 - 2"}};
  return GroupAction::create(RingTower::create(spec), {"w"}, FiniteGroup::cyclic(2, "frob"), {{}, {{"w", "-w"}}});
}

GroupAction symmetric_action() {
  TowerSpec spec;
  spec.vars = {"s1", "s2"};
  spec.extensions = {{"X2", "X2^2 - s1*X2 + s2"}};
  return GroupAction::create(RingTower::create(spec), {"X2"}, FiniteGroup::cyclic(2, "s"), {{}, {{"X2", "s1 - X2"}}});
}

// ---------------------------------------------------------------- JSON

namespace {

FiniteGroup group_from_json(const Json& j) {
  if (!j.is_object()) throw PresentationError("action.group: object expected");
  if (j.contains("cyclic")) return FiniteGroup::cyclic(j["cyclic"].get<std::size_t>(), j.value("generator", std::string("g")));
  if (j.contains("abelian")) return FiniteGroup::abelian(j["abelian"].get<std::vector<std::size_t>>());
  if (j.contains("elements") && j.contains("table"))
    return FiniteGroup::from_table(j["elements"].get<std::vector<std::string>>(),
                                   j["table"].get<std::vector<std::vector<std::size_t>>>());
  throw PresentationError("action.group: expected 'cyclic', 'abelian' or 'elements' + 'table'");
}

}  // namespace

GroupAction action_from_json(const Json& j) {
  for (const char* k : {"ring", "relative", "group", "action"})
    if (!j.is_object() || !j.contains(k)) throw PresentationError(std::string("action: missing field '") + k + "'");
  Ring b = ring_from_json(j["ring"]);
  FiniteGroup g;
  std::vector<std::string> rel;
  try {
    g = group_from_json(j["group"]);
    rel = j["relative"].get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw PresentationError(std::string("action: ") + e.what());
  }
  std::vector<std::map<std::string, std::string>> images(g.size());
  if (!j["action"].is_object()) throw PresentationError("action.action: object expected");
  for (const auto& [name, im] : j["action"].items()) {
    if (!im.is_object()) throw PresentationError("action.action." + name + ": object expected");
    for (const auto& [sym, expr] : im.items()) {
      if (!expr.is_string()) throw PresentationError("action.action." + name + "." + sym + ": string expected");
      images[g.index(name)][sym] = expr.get<std::string>();
    }
  }
  return GroupAction::create(b, rel, std::move(g), images);
}

Json action_to_json(const GroupAction& a) {
  Json act = Json::object();
  for (std::size_t x = 0; x < a.group().size(); ++x) {
    Json im = Json::object();
    for (const auto& r : a.relative()) im[r] = a.hom(x).image(r).to_string();
    act[a.group().name(x)] = im;
  }
  return {{"ring", ring_to_json(a.ring())},
          {"relative", a.relative()},
          {"group", {{"elements", a.group().names()}, {"table", a.group().table()}}},
          {"action", act}};
}

Cocycle cocycle_from_json(const GroupAction& a, const Json& j) {
  if (!j.is_object()) throw PresentationError("cocycle: object expected");
  std::map<std::string, Element> theta;
  for (const auto& [name, v] : j.items()) theta[name] = element_from_json(a.ring(), v);
  return verify_cocycle(a, theta);
}

// ---------------------------------------------------------------- suite

Report galois_suite(const GaloisSuiteOptions& opt) {
  Report rep("galois");
  Random rng(opt.seed);
  ModuleSearch search{opt.degree_bound, opt.unit_budget, opt.seed};

  rep.guarded("rho-complex-circle", "rho = [[1, i], [1, -i]], det rho = -2i is a unit", [&] {
    GroupAction act = complex_circle_action();
    GaloisCoverCheck c = verify_galois_cover(act);
    const Ring& b = act.ring();
    bool ok = c.rho == Matrix::parse(b, {{"1", "i"}, {"1", "-i"}}) && c.det == b->parse("-2*i") && c.galois();
    rep.check("rho-complex-circle", "rho = [[1, i], [1, -i]], det rho = -2i is a unit", ok, c.to_json());
  });

  rep.guarded("rho-product-cover", "B = prod_G A with (gb)(g') = b(g'g) is galois", [&] {
    TowerSpec spec;
    spec.vars = {"u"};
    Ring a = RingTower::create(spec);
    std::vector<FiniteGroup> groups{FiniteGroup::cyclic(1), FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                                    FiniteGroup::cyclic(4), FiniteGroup::abelian({2, 2})};
    bool ok = true;
    Json w = Json::array();
    for (const auto& g : groups) {
      GaloisCoverCheck c = verify_galois_cover(product_cover(a, g));
      ok = ok && c.galois();
      w.push_back({{"order", g.size()}, {"det", c.det.to_string()}, {"galois", c.galois()}});
    }
    rep.check("rho-product-cover", "B = prod_G A with (gb)(g') = b(g'g) is galois", ok, w);
  });

  rep.guarded("rho-symmetric", "Q[X1, X2] over symmetric polynomials: det rho = X1 - X2 is not a unit", [&] {
    GroupAction act = symmetric_action();
    GaloisCoverCheck c = verify_galois_cover(act);
    bool ok = c.det == act.ring()->parse("s1 - 2*X2") && !c.det_inverse && !c.galois();
    rep.check("rho-symmetric", "Q[X1, X2] over symmetric polynomials: det rho = X1 - X2 is not a unit", ok, c.to_json());
  });

  GroupAction circle = complex_circle_action();
  const Ring& cb = circle.ring();
  GroupAction gauss = gaussian_action();

  rep.guarded("mobius-cocycle", "theta(s) = x + iy: theta(s) s(theta(s)) = x^2 + y^2 = 1", [&] {
    Cocycle th = verify_cocycle(circle, {{"s", cb->parse("x + i*y")}});
    trivial_cocycle(circle);
    std::string rejected;
    try {
      verify_cocycle(circle, {{"s", cb->sym("x")}});
    } catch (const CertificateError& e) {
      rejected = e.what();
    }
    bool ok = th.theta_inv[1] == cb->parse("x - i*y") && !rejected.empty();
    rep.check("mobius-cocycle", "theta(s) = x + iy: theta(s) s(theta(s)) = x^2 + y^2 = 1", ok,
              {{"theta", th.to_json()}, {"theta(s)^-1", th.theta_inv[1].to_string()}, {"theta(s) = x", rejected}});
  });

  rep.guarded("coboundary", "u/s(u): (2+i)/(2-i) = (3+4i)/5 and (x+iy)(1+x-iy) = 1+x+iy", [&] {
    const Ring& g = gauss.ring();
    Cocycle c = coboundary(gauss, g->parse("2 + i"));
    bool ok = c(1) == g->parse("(3 + 4*i)/5") && coboundary(gauss, g->one()) == trivial_cocycle(gauss);
    Element u = cb->parse("1 + x + i*y");
    ok = ok && cb->parse("x + i*y") * circle.apply(1, u) == u;
    // 1 + x + iy is not a unit of B, so theta = x + iy is not the coboundary of u in B.
    std::string refused;
    try {
      coboundary(circle, u);
    } catch (const PreconditionError& e) {
      refused = e.what();
    }
    ok = ok && !refused.empty();
    rep.check("coboundary", "u/s(u): (2+i)/(2-i) = (3+4i)/5 and (x+iy)(1+x-iy) = 1+x+iy", ok,
              {{"theta(s) for u = 2+i", c(1).to_string()}, {"u = 1+x+iy", refused}});
  });

  rep.guarded("module-trivial", "L_1 = A with generator 1", [&] {
    CocycleModule m = cocycle_module(trivial_cocycle(gauss), search);
    bool ok = m.generators.size() == 1 && m.generators[0].is_one() && m.unit_member && m.dual;
    rep.check("module-trivial", "L_1 = A with generator 1", ok, m.to_json());
  });

  const char* mob_anchor = "theta(s) = x+iy: (x+iy)(a-ib) = a+ib, 1+x+iy in L_theta from degree 1, sum b_i x_i = 1";
  std::optional<CocycleModule> mob;
  rep.guarded("module-mobius", mob_anchor, [&] {
    Cocycle th = verify_cocycle(circle, {{"s", cb->parse("x + i*y")}});
    mob = cocycle_module(th, search);
    Element a = cb->parse("1 + x");
    Element b = cb->sym("y");
    Element i = cb->sym("i");
    bool identity = cb->parse("x + i*y") * (a - i * b) == a + i * b;
    Element target = cb->parse("1 + x + i*y");
    // 1 + x + iy lies in the Q-span of the degree-1 members.
    auto span = bounded_combination(mob->generators, target, 0);
    bool ok = identity && in_cocycle_module(th, target) && mob->degree == 1 && span && mob->dual;
    rep.check("module-mobius", mob_anchor, ok, mob->to_json());
  });

  rep.guarded("module-mobius-units", "no member of L_theta with coordinates of degree <= bound is a unit of B", [&] {
    if (!mob) throw Error("module search did not run");
    if (!mob->found())
      rep.add("module-mobius-units", "no member of L_theta with coordinates of degree <= bound is a unit of B",
              Status::Inconclusive, {{"reason", "no members found"}});
    else
      rep.check("module-mobius-units", "no member of L_theta with coordinates of degree <= bound is a unit of B",
                !mob->unit_member,
                {{"candidates", mob->unit_candidates},
                 {"unit", mob->unit_member ? mob->unit_member->to_string() : "none"}});
  });

  rep.guarded("module-gaussian", "theta(s) = (3+4i)/5: L_theta = (2+i) A, free", [&] {
    const Ring& g = gauss.ring();
    CocycleModule m = cocycle_module(verify_cocycle(gauss, {{"s", g->parse("(3 + 4*i)/5")}}), search);
    bool ok = m.generators.size() == 1 && m.generators[0] == g->parse("2 + i") && m.unit_member.has_value();
    rep.check("module-gaussian", "theta(s) = (3+4i)/5: L_theta = (2+i) A, free", ok, m.to_json());
  });

  rep.guarded("hilbert90-gaussian", "every norm-1 z of Q(i) is u/s(u) with u a Lagrange resolvent", [&] {
    const Ring& g = gauss.ring();
    std::optional<Json> bad;
    Json sample = Json::array();
    for (std::size_t k = 0; k < opt.hilbert_cases; ++k) {
      // z = ((1 - t^2) + 2t i) / (1 + t^2), t rational.
      Scalar t = rng.scalar(CoeffDomain::rationals(), 9, false, true);
      Element z = (g->constant(1 - t * t) + g->sym("i") * Scalar(2 * t)) * Scalar(1 / (1 + t * t));
      if (rng.coin()) z = -z;
      Cocycle th = verify_cocycle(gauss, {{"s", z}});
      Hilbert90Witness w = hilbert90_witness(th, field_samples(gauss, rng, 6));
      bool ok = z * gauss.apply(1, w.u) == w.u;
      if (!ok && !bad) bad = Json{{"z", z.to_string()}, {"u", w.u.to_string()}};
      if (k < 3) sample.push_back({{"z", z.to_string()}, {"u", w.u.to_string()}});
    }
    rep.check("hilbert90-gaussian", "every norm-1 z of Q(i) is u/s(u) with u a Lagrange resolvent", !bad,
              bad ? *bad : Json{{"cases", opt.hilbert_cases}, {"first", sample}});
  });

  rep.guarded("hilbert90-f25", "every norm-1 z of F_25 is u/frob(u); exhaustive search agrees", [&] {
    GroupAction f = f25_action();
    const Ring& r = f.ring();
    std::vector<Element> field;
    for (long a = 0; a < 5; ++a)
      for (long b = 0; b < 5; ++b) field.push_back(r->constant(a) + r->sym("w") * Scalar(b));
    std::vector<Element> norm_one;
    for (const auto& z : field)
      if ((z * f.apply(1, z)).is_one()) norm_one.push_back(z);
    std::optional<Json> bad;
    for (std::size_t k = 0; k < opt.hilbert_cases; ++k) {
      const Element& z = norm_one[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(norm_one.size()) - 1))];
      Cocycle th = verify_cocycle(f, {{"frob", z}});
      Hilbert90Witness w = hilbert90_witness(th, field);
      bool oracle = std::any_of(field.begin(), field.end(),
                                [&](const Element& u) { return !u.is_zero() && z * f.apply(1, u) == u; });
      if ((z * f.apply(1, w.u) != w.u || !oracle) && !bad) bad = Json{{"z", z.to_string()}, {"u", w.u.to_string()}};
    }
    Json nl = Json::array();
    for (const auto& z : norm_one) nl.push_back(z.to_string());
    rep.check("hilbert90-f25", "every norm-1 z of F_25 is u/frob(u); exhaustive search agrees", !bad && norm_one.size() == 6,
              bad ? *bad : Json{{"cases", opt.hilbert_cases}, {"norm one", nl}});
  });

  rep.guarded("signature-examples", "P = V Q with V = prod_{i<j} (X_j - X_i), Q symmetric", [&] {
    TowerSpec s2;
    s2.vars = {"X1", "X2"};
    Ring r2 = RingTower::create(s2);
    TowerSpec s3;
    s3.vars = {"X1", "X2", "X3"};
    Ring r3 = RingTower::create(s3);
    bool ok = signature_divide(r2->parse("X2 - X1")).is_one() &&
              signature_divide(r2->parse("X2^2 - X1^2")) == r2->parse("X1 + X2") &&
              signature_divide(vandermonde_product(r3) * r3->parse("X1 + X2 + X3")) == r3->parse("X1 + X2 + X3");
    std::string rejected;
    try {
      signature_divide(r2->sym("X1"));
    } catch (const PreconditionError& e) {
      rejected = e.what();
    }
    rep.check("signature-examples", "P = V Q with V = prod_{i<j} (X_j - X_i), Q symmetric", ok && !rejected.empty(),
              {{"X1", rejected}});
  });

  rep.guarded("signature-random", "alternating P = V * symmetric S divides back to S; V * X1 is refused", [&] {
    std::optional<Json> bad;
    std::size_t refused = 0;
    for (std::size_t k = 0; k < opt.signature_cases; ++k) {
      std::size_t n = 2 + k % 3;
      TowerSpec spec;
      for (std::size_t v = 1; v <= n; ++v) spec.vars.push_back("X" + std::to_string(v));
      Ring r = RingTower::create(spec);
      // Elementary symmetric polynomials.
      std::vector<Element> e{r->one()};
      for (std::size_t v = 0; v < n; ++v) {
        Element x = r->sym(spec.vars[v]);
        std::vector<Element> next(e.size() + 1, r->zero());
        for (std::size_t i = 0; i < e.size(); ++i) {
          next[i] += e[i];
          next[i + 1] += e[i] * x;
        }
        e = std::move(next);
      }
      Element s = r->constant(rng.scalar(r->coeff(), 4, false, true));
      long terms = rng.uniform(1, 3);
      for (long t = 0; t < terms; ++t)
        s += e[static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)))] *
             e[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n)))] * rng.scalar(r->coeff(), 4, true, true);
      Element v = vandermonde_product(r);
      if (signature_divide(v * s) != s && !bad) bad = Json{{"S", s.to_string()}};
      try {
        signature_divide(v * r->sym("X1"));
      } catch (const PreconditionError&) {
        ++refused;
      }
    }
    rep.check("signature-random", "alternating P = V * symmetric S divides back to S; V * X1 is refused",
              !bad && refused == opt.signature_cases,
              bad ? *bad : Json{{"cases", opt.signature_cases}, {"refused", refused}});
  });

  if (opt.action) {
    rep.guarded("input-cover", "det rho is a unit and averages lie in A", [&] {
      GaloisCoverCheck c = verify_galois_cover(*opt.action);
      rep.check("input-cover", "det rho is a unit and averages lie in A", c.galois(), c.to_json());
    });
    if (opt.cocycle) {
      rep.guarded("input-module", "members of L_theta and sum b_i x_i = 1", [&] {
        CocycleModule m = cocycle_module(cocycle_from_json(*opt.action, *opt.cocycle), search);
        Status st = m.dual ? Status::Pass : Status::Inconclusive;
        rep.add("input-module", "members of L_theta and sum b_i x_i = 1", st, m.to_json());
      });
    }
  }
  return rep;
}

}  // namespace picard
