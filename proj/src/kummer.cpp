#include "picard/kummer.hpp"

#include <string>

#include "picard/arith.hpp"
#include "picard/errors.hpp"

namespace picard {

namespace {

std::string fresh_symbol(const Ring& r, std::string name) {
  while (r->symbol_slot(name)) name += "_";
  return name;
}

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

Json tuple_json(const std::vector<std::size_t>& v) {
  Json j = Json::array();
  for (auto x : v) j.push_back(x);
  return j;
}

Ring prime_field_ring(long p) {
  TowerSpec spec;
  spec.coeff = CoeffDomain::prime_field(p);
  return RingTower::create(spec);
}

Ring gaussian_ring() {
  TowerSpec spec;
  spec.base_generator = {"i", "i^2 + 1"};
  return RingTower::create(spec);
}

// Exponent of chi(g) for chi, g given by coordinates on Z/d_1 x ... x Z/d_r.
std::size_t pairing(const std::vector<std::size_t>& chi, const std::vector<std::size_t>& g,
                    const std::vector<std::size_t>& factors, std::size_t n) {
  std::size_t e = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) e += chi[i] * g[i] * (n / factors[i]);
  return e % n;
}

// Keeps the elements whose A-coordinates are independent over the field A.
std::vector<Element> independent_over_base(const GroupAction& act, const std::vector<Element>& elems) {
  if (!act.base()->is_field_tower()) return elems;
  std::vector<std::pair<std::size_t, std::vector<Element>>> echelon;
  std::vector<Element> kept;
  for (const auto& e : elems) {
    auto v = act.coordinates(e);
    for (const auto& [p, row] : echelon) {
      if (v[p].is_zero()) continue;
      Element k = v[p];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= k * row[j];
    }
    std::size_t q = 0;
    while (q < v.size() && v[q].is_zero()) ++q;
    if (q == v.size()) continue;
    Element inv = *inverse(v[q]);
    for (auto& x : v) x *= inv;
    echelon.emplace_back(q, std::move(v));
    kept.push_back(e);
  }
  return kept;
}

}  // namespace

// ------------------------------------------------------------------ (P_N)

RootData check_PN(const Ring& ring, const Element& z, std::size_t n) {
  if (n == 0) throw PreconditionError("N must be positive");
  Element zeta = lift(z, ring);
  RootData rd{ring, zeta, n, {}, {}, ring->zero(), Json::object()};
  rd.powers.push_back(ring->one());
  for (std::size_t k = 1; k < n; ++k) {
    rd.powers.push_back(rd.powers.back() * zeta);
    if (rd.powers.back() == ring->one())
      throw CertificateError("order: zeta^" + std::to_string(k) + " = 1 with " + std::to_string(k) + " < N");
  }
  if (rd.powers.back() * zeta != ring->one())
    throw CertificateError("zeta^N = 1 fails: zeta^N = " + (rd.powers.back() * zeta).to_string());

  Json units = Json::object();
  rd.one_minus_inverse.push_back(ring->zero());
  for (std::size_t k = 1; k < n; ++k) {
    Element u = ring->one() - rd.powers[k];
    auto inv = inverse(u);
    if (!inv)
      throw CertificateError("unit: 1 - zeta^" + std::to_string(k) + " = " + u.to_string() + " is not a unit");
    units["(1 - zeta^" + std::to_string(k) + ")^-1"] = inv->to_string();
    rd.one_minus_inverse.push_back(*inv);
  }

  // X^N - 1 = prod_k (X - zeta^k)
  Ring rx = adjoin_vars(ring, {fresh_symbol(ring, "X")});
  Element xx = Element::monomial(rx, [&] {
    Exponents e = rx->unit_exponents();
    e[ring->nvars()] = 1;
    return e;
  }());
  Element prod = rx->one();
  for (std::size_t k = 0; k < n; ++k) prod *= xx - lift(rd.powers[k], rx);
  Element lhs = xx.pow(static_cast<unsigned>(n)) - rx->one();
  if (prod != lhs) throw CertificateError("factorization: prod (X - t) - (X^N - 1) = " + (prod - lhs).to_string());
  Json factors = Json::array();
  for (std::size_t k = 0; k < n; ++k) factors.push_back((xx - lift(rd.powers[k], rx)).to_string());

  auto ninv = inverse(ring->constant(Scalar(static_cast<long>(n))));
  if (!ninv) throw CertificateError("N invertible: " + std::to_string(n) + " is not a unit");
  rd.n_inverse = *ninv;

  // sum_{j<d} t^j = 0 for t != 1, t^d = 1, d | N.
  std::size_t sums = 0;
  for (std::size_t d : divisors(n))
    for (std::size_t k = 1; k < n; ++k) {
      if (k * d % n != 0) continue;
      Element s = ring->zero();
      for (std::size_t j = 0; j < d; ++j) s += rd.power(k * j);
      if (!s.is_zero())
        throw CertificateError("sum: sum_{j<" + std::to_string(d) + "} zeta^(" + std::to_string(k) + "j) = " +
                               s.to_string());
      ++sums;
    }

  rd.certificate = {{"zeta", zeta.to_string()},
                    {"N", n},
                    {"units", units},
                    {"X^N - 1", factors},
                    {"N^-1", rd.n_inverse.to_string()},
                    {"vanishing sums checked", sums}};
  return rd;
}

// ------------------------------------------------------------ characters

CharacterGroup character_group(const std::vector<std::size_t>& factors, const RootData& roots) {
  for (auto d : factors)
    if (d == 0 || roots.n % d != 0)
      throw PreconditionError("factor " + std::to_string(d) + " does not divide N = " + std::to_string(roots.n));
  CharacterGroup cg{factors, roots.n, FiniteGroup::abelian(factors), {}};
  FiniteGroup g = FiniteGroup::abelian(factors);
  for (std::size_t chi = 0; chi < cg.dual.size(); ++chi) {
    std::vector<std::size_t> row;
    auto k = cg.dual.coordinates(chi);
    for (std::size_t h = 0; h < g.size(); ++h) row.push_back(pairing(k, g.coordinates(h), factors, roots.n));
    cg.values.push_back(std::move(row));
  }
  // Pointwise product matches the group law of the dual.
  for (std::size_t a = 0; a < cg.size(); ++a)
    for (std::size_t b = 0; b < cg.size(); ++b)
      for (std::size_t h = 0; h < g.size(); ++h)
        if ((cg.values[a][h] + cg.values[b][h]) % roots.n != cg.values[cg.product(a, b)][h])
          throw CertificateError("character product is not pointwise");
  return cg;
}

VandermondeIso vandermonde_iso(const RootData& roots, std::size_t d) {
  if (d == 0 || roots.n % d != 0) throw PreconditionError("d must divide N");
  const std::size_t step = roots.n / d;
  Matrix m(roots.ring, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = roots.power(step * i * j);
  Element det = m.determinant();
  // det = prod_{i<j} (w^j - w^i)
  Element expect = roots.ring->one();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) expect *= roots.power(step * j) - roots.power(step * i);
  if (det != expect) throw CertificateError("Vandermonde determinant " + det.to_string() + " != " + expect.to_string());
  auto inv = inverse_matrix(m);
  if (!inv) throw CertificateError("Vandermonde determinant " + det.to_string() + " is not a unit");
  return {m, det, *inv};
}

VandermondeIso character_matrix(const CharacterGroup& chars, const RootData& roots) {
  Matrix m = Matrix::identity(roots.ring, 1);
  for (auto d : chars.factors) m = m.kron(vandermonde_iso(roots, d).matrix);
  for (std::size_t chi = 0; chi < chars.size(); ++chi)
    for (std::size_t h = 0; h < chars.size(); ++h)
      if (m(chi, h) != roots.power(chars.values[chi][h]))
        throw CertificateError("Kronecker product differs from chi(g) at (" + std::to_string(chi) + ", " +
                               std::to_string(h) + ")");
  Element det = m.determinant();
  auto inv = inverse_matrix(m);
  if (!inv) throw CertificateError("character matrix determinant " + det.to_string() + " is not a unit");
  return {m, det, *inv};
}

// --------------------------------------------------------- decomposition

std::size_t KummerDecomposition::generator_count() const {
  std::size_t c = 0;
  for (const auto& comp : components) c += comp.basis.size();
  return c;
}

Json KummerDecomposition::to_json() const {
  Json comps = Json::array();
  for (const auto& c : components) {
    Json gens = Json::array();
    for (const auto& g : c.basis) gens.push_back(g.to_string());
    comps.push_back({{"theta", tuple_json(c.theta)},
                     {"generators", gens},
                     {"free", c.module.unit_member.has_value()},
                     {"certificate", c.module.to_json()}});
  }
  Json missing_j = Json::array();
  for (const auto& m : missing) missing_j.push_back(tuple_json(m));
  Json j{{"factors", tuple_json(characters.factors)},
         {"N", characters.n},
         {"components", comps},
         {"missing", missing_j},
         {"generator_count", generator_count()}};
  j["change_of_basis"] = change ? matrix_to_json(*change) : Json(nullptr);
  j["det"] = det ? Json(det->to_string()) : Json(nullptr);
  j["inverse"] = inverse ? matrix_to_json(*inverse) : Json(nullptr);
  j["reconstructs_basis"] = reconstructs;
  j["grading"] = grading;
  return j;
}

KummerDecomposition kummer_decomposition(const GroupAction& action, const RootData& roots,
                                         const ModuleSearch& search) {
  const FiniteGroup& g = action.group();
  if (g.factors().empty() || !g.is_abelian())
    throw PreconditionError("kummer_decomposition needs G given by cyclic factors");
  if (!(*roots.ring == *action.base())) throw RingMismatch("roots live outside the base ring of the action");
  const Ring& b = action.ring();
  const Ring& a = action.base();

  KummerDecomposition out{character_group(g.factors(), roots), {}, std::nullopt, std::nullopt, std::nullopt,
                          false, false, {}};
  const CharacterGroup& cg = out.characters;
  std::vector<Element> zeta_b;
  for (const auto& p : roots.powers) zeta_b.push_back(lift(p, b));

  // A character is a cocycle since A is fixed: theta(gh) = theta(g) theta(h) = theta(g) g(theta(h)).
  std::vector<Cocycle> cocycles;
  for (std::size_t chi = 0; chi < cg.size(); ++chi) {
    std::vector<Element> theta;
    auto k = cg.exponents(chi);
    for (std::size_t h = 0; h < g.size(); ++h) theta.push_back(zeta_b[pairing(k, g.coordinates(h), cg.factors, cg.n)]);
    cocycles.push_back(verify_cocycle(action, std::move(theta)));
  }
  for (std::size_t chi = 0; chi < cg.size(); ++chi) {
    CocycleModule m = cocycle_module(cocycles[chi], search);
    if (!m.found() || !m.dual) out.missing.push_back(cg.exponents(chi));
    auto basis = independent_over_base(action, m.generators);
    out.components.push_back({cg.exponents(chi), std::move(m), std::move(basis)});
  }
  if (!out.complete()) return out;

  std::vector<Element> gens;
  for (const auto& c : out.components)
    for (const auto& e : c.basis) gens.push_back(e);
  Matrix change(a, action.rank(), gens.size());
  for (std::size_t col = 0; col < gens.size(); ++col) {
    auto coords = action.coordinates(gens[col]);
    for (std::size_t j = 0; j < coords.size(); ++j) change(j, col) = coords[j];
  }
  out.change = change;
  if (change.square()) {
    out.det = change.determinant();
    out.inverse = inverse_matrix(change);
    if (out.inverse) {
      bool ok = true;
      for (std::size_t j = 0; j < action.rank() && ok; ++j) {
        Element s = b->zero();
        for (std::size_t col = 0; col < gens.size(); ++col) s += lift((*out.inverse)(col, j), b) * gens[col];
        ok = s == action.basis()[j];
      }
      out.reconstructs = ok;
    }
  }

  bool graded = true;
  for (std::size_t x = 0; x < cg.size() && graded; ++x)
    for (std::size_t y = 0; y < cg.size() && graded; ++y) {
      const Cocycle& target = out.components[cg.product(x, y)].module.cocycle;
      for (const auto& u : out.components[x].basis)
        for (const auto& v : out.components[y].basis)
          if (!in_cocycle_module(target, u * v)) graded = false;
    }
  out.grading = graded;
  return out;
}

// ------------------------------------------------------- free algebra

Json KummerAlgebra::to_json() const {
  return {{"ring", ring_to_json(action.ring())},
          {"action", action_to_json(action)},
          {"cover", cover.to_json()},
          {"decomposition", decomposition.to_json()},
          {"monomial_components", monomial_components}};
}

KummerAlgebra kummer_algebra_free(const RootData& roots, const Element& t, std::size_t d,
                                  const ModuleSearch& search) {
  if (d == 0 || roots.n % d != 0) throw PreconditionError("d must divide N");
  const Ring& a = roots.ring;
  Element ta = lift(t, a);
  if (!is_unit(ta)) throw PreconditionError("t = " + ta.to_string() + " is not a unit");
  std::string x = fresh_symbol(a, "x");
  Ring b = adjoin_extension(a, x, x + "^" + std::to_string(d) + " - (" + ta.to_string() + ")", false);
  Element xb = b->sym(x);
  const std::size_t step = roots.n / d;
  std::vector<std::map<std::string, std::string>> images;
  for (std::size_t k = 0; k < d; ++k) images.push_back({{x, (lift(roots.power(step * k), b) * xb).to_string()}});
  GroupAction act = GroupAction::create(b, {x}, FiniteGroup::cyclic(d), images);
  GaloisCoverCheck cover = verify_galois_cover(act);
  if (!cover.galois()) throw CertificateError("rho determinant " + cover.det.to_string() + " is not a unit");

  KummerAlgebra out{act, cover, kummer_decomposition(act, roots, search), false};
  const auto& dec = out.decomposition;
  bool ok = dec.isomorphism() && dec.grading;
  // theta(g) = omega^j acts on L_theta by omega^{-j}, matching x^{(d - j) mod d}.
  for (const auto& c : dec.components) {
    if (!ok) break;
    std::size_t j = c.theta[0] % d;
    std::size_t k = (d - j) % d;
    if (c.basis.size() != 1) {
      ok = false;
      break;
    }
    auto coords = act.coordinates(c.basis[0]);
    for (std::size_t m = 0; m < coords.size(); ++m)
      if ((m == k) != !coords[m].is_zero()) ok = false;
    ok = ok && is_unit(coords[k]);
  }
  out.monomial_components = ok;
  return out;
}

KummerAlgebra f5_kummer(const ModuleSearch& search) {
  Ring f5 = prime_field_ring(5);
  RootData rd = check_PN(f5, f5->constant(2), 4);
  return kummer_algebra_free(rd, f5->constant(2), 4, search);
}

// ------------------------------------------------------------------ suite

Report kummer_suite(const KummerSuiteOptions& opt) {
  Report rep("kummer");
  ModuleSearch search{opt.degree_bound, opt.unit_budget, opt.seed};
  Ring f5 = prime_field_ring(5);
  Ring qi = gaussian_ring();

  rep.guarded("PN-F5", "X^4 - 1 = (X - 1)(X - 2)(X - 3)(X - 4) over F_5", [&] {
    RootData rd = check_PN(f5, f5->constant(2), 4);
    // oracle: expand over F_5[X] directly, roots 2^k = 1, 2, 4, 3
    TowerSpec spec;
    spec.coeff = CoeffDomain::prime_field(5);
    spec.vars = {"X"};
    Ring fx = RingTower::create(spec);
    Element prod = fx->one();
    for (int c = 1; c <= 4; ++c) prod *= fx->sym("X") - Scalar(c);
    bool ok = prod == fx->parse("X^4 - 1");
    std::vector<Element> expect{f5->constant(1), f5->constant(2), f5->constant(4), f5->constant(3)};
    ok = ok && rd.powers == expect;
    rep.check("PN-F5", "X^4 - 1 = (X - 1)(X - 2)(X - 3)(X - 4) over F_5", ok, rd.certificate);
  });

  rep.guarded("PN-gaussian", "(1 - i)(1 + i)/2 = 1, zeta = i, N = 4", [&] {
    RootData rd = check_PN(qi, qi->sym("i"), 4);
    bool ok = rd.one_minus_inverse[1] == qi->parse("(1 + i)/2") && rd.n_inverse == qi->constant(Scalar(1, 4));
    rep.check("PN-gaussian", "(1 - i)(1 + i)/2 = 1, zeta = i, N = 4", ok, rd.certificate);
  });

  rep.guarded("PN-integers-fails", "1 - (-1) = 2 is not a unit of Z", [&] {
    TowerSpec spec;
    spec.coeff = CoeffDomain::integers();
    Ring z = RingTower::create(spec);
    std::string err;
    try {
      check_PN(z, z->constant(-1), 2);
    } catch (const CertificateError& e) {
      err = e.what();
    }
    bool ok = err.find("1 - zeta^1 = 2 is not a unit") != std::string::npos;
    rep.check("PN-integers-fails", "1 - (-1) = 2 is not a unit of Z", ok, {{"error", err}});
  });

  rep.guarded("characters", "|Hom(G, T)| = |G| for Z/2, Z/4, Z/2 x Z/2", [&] {
    RootData gi = check_PN(qi, qi->sym("i"), 4);
    RootData f = check_PN(f5, f5->constant(2), 4);
    Ring q = RingTower::create(TowerSpec{});
    RootData sign = check_PN(q, q->constant(-1), 2);
    CharacterGroup c2 = character_group({2}, gi);
    CharacterGroup c4 = character_group({4}, f);
    CharacterGroup c22 = character_group({2, 2}, sign);
    bool ok = c2.size() == 2 && c4.size() == 4 && c22.size() == 4;
    // Over F_5: chi_j(g^k) = 2^{jk}.
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) ok = ok && f.power(c4.values[j][k]) == f5->constant(Scalar(1 << (j * k % 4)));
    ok = ok && c2.values[1] == std::vector<std::size_t>{0, 2};
    std::string bad;
    try {
      character_group({3}, f);
    } catch (const PreconditionError& e) {
      bad = e.what();
    }
    ok = ok && !bad.empty();
    Json w{{"Z/2 over Q(i)", c2.values}, {"Z/4 over F_5", c4.values}, {"Z/2 x Z/2, N = 2", c22.values},
           {"Z/3 with N = 4", bad}};
    rep.check("characters", "|Hom(G, T)| = |G| for Z/2, Z/4, Z/2 x Z/2", ok, w);
  });

  rep.guarded("vandermonde-examples", "(2^{ij}) over F_5 is invertible; d = 1 gives (1); [[1, 1], [1, -1]] has det -2",
              [&] {
                RootData f = check_PN(f5, f5->constant(2), 4);
                RootData gi = check_PN(qi, qi->sym("i"), 4);
                VandermondeIso v4 = vandermonde_iso(f, 4);
                VandermondeIso v1 = vandermonde_iso(f, 1);
                VandermondeIso v2 = vandermonde_iso(gi, 2);
                bool ok = !v4.det.is_zero() && v4.matrix * v4.inverse == Matrix::identity(f5, 4);
                ok = ok && v1.matrix == Matrix::identity(f5, 1) && v1.det == f5->one();
                ok = ok && v2.matrix == Matrix::parse(qi, {{"1", "1"}, {"1", "-1"}}) && v2.det == qi->constant(-2);
                rep.check("vandermonde-examples",
                          "(2^{ij}) over F_5 is invertible; d = 1 gives (1); [[1, 1], [1, -1]] has det -2", ok,
                          {{"F_5 d = 4", {{"matrix", matrix_to_json(v4.matrix)}, {"det", v4.det.to_string()}}},
                           {"Q(i) d = 2", {{"matrix", matrix_to_json(v2.matrix)}, {"det", v2.det.to_string()}}}});
              });

  rep.guarded("vandermonde-sweep", "det (zeta^{ij}) is a unit for p = 1 mod N", [&] {
    Json cases = Json::array();
    bool ok = true;
    std::size_t count = 0;
    for (long p = 2; p <= opt.max_prime; ++p) {
      bool prime = true;
      for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) prime = false;
      if (!prime) continue;
      Ring fp = prime_field_ring(p);
      for (std::size_t n = 1; n <= opt.max_n; ++n) {
        if ((p - 1) % static_cast<long>(n) != 0) continue;
        // smallest element of exact order n
        long zeta = 0;
        for (long c = 1; c < p && !zeta; ++c) {
          long e = 1, acc = c % p;
          while (acc != 1) acc = acc * c % p, ++e;
          if (e == static_cast<long>(n)) zeta = c;
        }
        RootData rd = check_PN(fp, fp->constant(zeta), n);
        VandermondeIso v = vandermonde_iso(rd, n);
        bool unit = is_unit(v.det) && v.matrix * v.inverse == Matrix::identity(fp, n);
        ok = ok && unit;
        ++count;
        cases.push_back({{"p", p}, {"N", n}, {"zeta", zeta}, {"det", v.det.to_string()}});
      }
    }
    rep.check("vandermonde-sweep", "det (zeta^{ij}) is a unit for p = 1 mod N", ok && count > 0,
              {{"cases", count}, {"determinants", cases}});
  });

  rep.guarded("character-matrix", "(chi(g)) = Kronecker product of cyclic Vandermonde matrices, unit det", [&] {
    Ring q = RingTower::create(TowerSpec{});
    RootData sign = check_PN(q, q->constant(-1), 2);
    RootData f7 = check_PN(prime_field_ring(13), prime_field_ring(13)->constant(5), 4);
    VandermondeIso klein = character_matrix(character_group({2, 2}, sign), sign);
    VandermondeIso mixed = character_matrix(character_group({2, 4}, f7), f7);
    bool ok = klein.det == q->constant(16) && is_unit(mixed.det);
    rep.check("character-matrix", "(chi(g)) = Kronecker product of cyclic Vandermonde matrices, unit det", ok,
              {{"Z/2 x Z/2 over Q", {{"matrix", matrix_to_json(klein.matrix)}, {"det", klein.det.to_string()}}},
               {"Z/2 x Z/4 over F_13", {{"det", mixed.det.to_string()}}}});
  });

  rep.guarded("decomposition-f5", "F_5[x]/(x^4 - 2) = sum_k F_5 x^k, g(x) = 2x", [&] {
    KummerAlgebra k = f5_kummer(search);
    const auto& dec = k.decomposition;
    bool ok = k.cover.galois() && k.monomial_components && dec.components.size() == 4 && dec.generator_count() == 4 &&
              dec.det && is_unit(*dec.det) && dec.reconstructs && dec.grading;
    rep.check("decomposition-f5", "F_5[x]/(x^4 - 2) = sum_k F_5 x^k, g(x) = 2x", ok, dec.to_json());
  });

  rep.guarded("decomposition-mobius", "A[i] = A + iA with sigma(i) = -i, T = {1, -1}", [&] {
    GroupAction act = complex_circle_action();
    const Ring& a = act.base();
    RootData rd = check_PN(a, a->constant(-1), 2);
    KummerDecomposition dec = kummer_decomposition(act, rd, search);
    const Ring& b = act.ring();
    bool ok = dec.isomorphism() && dec.grading && dec.components.size() == 2 && dec.generator_count() == 2 &&
              dec.components[0].basis == std::vector<Element>{b->one()} &&
              dec.components[1].basis == std::vector<Element>{b->sym("i")} && is_unit(*dec.det);
    rep.check("decomposition-mobius", "A[i] = A + iA with sigma(i) = -i, T = {1, -1}", ok, dec.to_json());
  });

  rep.guarded("decomposition-trivial", "G = 1: B = L_1 = A", [&] {
    RootData rd = check_PN(f5, f5->constant(2), 4);
    KummerAlgebra k = kummer_algebra_free(rd, f5->constant(2), 1, search);
    const auto& dec = k.decomposition;
    bool ok = k.action.rank() == 1 && dec.components.size() == 1 && dec.isomorphism() && k.monomial_components;
    rep.check("decomposition-trivial", "G = 1: B = L_1 = A", ok, dec.to_json());
  });

  rep.guarded("kummer-algebra-gaussian", "Q(i)[x]/(x^2 - 2), sigma(x) = -x: L_eps = xA", [&] {
    RootData rd = check_PN(qi, qi->sym("i"), 4);
    KummerAlgebra k = kummer_algebra_free(rd, qi->constant(2), 2, search);
    const auto& dec = k.decomposition;
    const Ring& b = k.action.ring();
    bool ok = k.cover.galois() && k.monomial_components && dec.components.size() == 2 &&
              dec.components[1].basis == std::vector<Element>{b->sym("x")};
    rep.check("kummer-algebra-gaussian", "Q(i)[x]/(x^2 - 2), sigma(x) = -x: L_eps = xA", ok, k.to_json());
  });

  if (opt.action) {
    rep.guarded("input-decomposition", "B = sum_theta L_theta for the input action", [&] {
      if (!opt.roots || !opt.roots->contains("zeta") || !opt.roots->contains("N"))
        throw PreconditionError("input action needs roots {\"zeta\": ..., \"N\": ...}");
      const Ring& a = opt.action->base();
      RootData rd = check_PN(a, a->parse((*opt.roots)["zeta"].get<std::string>()), (*opt.roots)["N"].get<std::size_t>());
      KummerDecomposition dec = kummer_decomposition(*opt.action, rd, search);
      Status st = Status::Fail;
      if (!dec.complete())
        st = Status::Inconclusive;
      else if (dec.isomorphism() && dec.grading)
        st = Status::Pass;
      Json w = dec.to_json();
      w["roots"] = rd.certificate;
      rep.add("input-decomposition", "B = sum_theta L_theta for the input action", st, w);
    });
  }
  return rep;
}

}  // namespace picard
