#include "picard/projective.hpp"

#include "picard/arith.hpp"
#include "picard/errors.hpp"

namespace picard {

Ring circle_ring() {
  static const Ring r = RingTower::create({CoeffDomain::rationals(), std::nullopt, {"x"}, {{"y", "y^2 + x^2 - 1"}}});
  return r;
}

Ring complex_circle_ring() {
  static const Ring r = RingTower::create(
      {CoeffDomain::rationals(), std::make_pair(std::string("i"), std::string("i^2 + 1")), {"x"}, {{"y", "y^2 + x^2 - 1"}}});
  return r;
}

Ring squaring_target_ring() {
  static const Ring r =
      RingTower::create({CoeffDomain::rationals(), std::nullopt, {"xi"}, {{"eta", "eta^2 + xi^2 - 1"}}});
  return r;
}

Ring universal_ring() {
  static const Ring r = RingTower::create({CoeffDomain::integers(), std::nullopt, {"y", "z"}, {{"x", "x^2 - x + y*z"}}});
  return r;
}

Ring scalar_ring(const CoeffDomain& dom) { return RingTower::create({dom, std::nullopt, {}, {}}); }

Projector::Projector(Matrix p) : p_(std::move(p)) {
  if (!p_.square()) throw CertificateError("a projector must be square");
  Matrix sq = p_ * p_;
  if (sq != p_) throw CertificateError("P^2 != P; P^2 - P = " + (sq - p_).to_string());
}

EvaluationPoint::EvaluationPoint(Ring ring, Ring field, const std::map<std::string, std::string>& values)
    : hom_(RingHom::from_strings(std::move(ring), std::move(field), values)) {
  if (!hom_.target()->is_field_tower()) throw PreconditionError("evaluation target must be a field");
}

EvaluationPoint EvaluationPoint::rational(const Ring& ring, const std::map<std::string, std::string>& values) {
  CoeffDomain dom = ring->coeff().kind == CoeffKind::PrimeField ? ring->coeff() : CoeffDomain::rationals();
  return EvaluationPoint(ring, scalar_ring(dom), values);
}

bool is_rank_one_projector_2x2(const Matrix& f) {
  if (f.rows() != 2 || f.cols() != 2) throw PreconditionError("expected a 2x2 matrix");
  if (!f.trace().is_one() || !f.determinant().is_zero()) return false;
  if (f * f != f) throw CertificateError("Tr = 1 and det = 0 but f^2 != f");
  return true;
}

Projector mobius_projector() {
  Ring a = circle_ring();
  return Projector(Matrix::parse(a, {{"1 + x", "y"}, {"y", "1 - x"}}) * Scalar(1, 2));
}

Projector universal_projector() {
  return Projector(Matrix::parse(universal_ring(), {{"x", "z"}, {"y", "1 - x"}}));
}

Complement complement_decomposition(const Projector& p) {
  const Matrix& m = p.matrix();
  Matrix id = Matrix::identity(p.ring(), p.size());
  Projector c(id - m);
  Complement out{c, false, false};
  out.products_vanish = (m * c.matrix()).is_zero() && (c.matrix() * m).is_zero();
  out.sums_to_identity = m + c.matrix() == id;
  return out;
}

bool conjugate_by(const Matrix& a, const Matrix& b, const Matrix& g) {
  if (!is_unit(g.determinant())) return false;
  return g * a == b * g;
}

std::size_t rank_at_point(const Matrix& m, const EvaluationPoint& pt) { return rank_over_field(m.map(pt.hom())); }

std::size_t rank_at_point(const Projector& p, const EvaluationPoint& pt) { return rank_at_point(p.matrix(), pt); }

namespace {

Element dot(const std::vector<Element>& a, const std::vector<Element>& b) {
  Element s(a.front().ring());
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string fresh_name(const Ring& ring, const std::string& stem) {
  std::string n = stem;
  for (int k = 0; ring->symbol_slot(n); ++k) n = stem + std::to_string(k);
  return n;
}

}  // namespace

SectionCertificate split_surjection(const Projector& p, const std::vector<Element>& alpha,
                                    const std::optional<std::vector<Element>>& x, const SearchBudget& budget) {
  const Ring& ring = p.ring();
  if (alpha.size() != p.size()) throw PreconditionError("alpha has the wrong length");
  SectionCertificate cert;
  std::optional<std::vector<Element>> found;
  if (x) {
    if (x->size() != p.size()) throw PreconditionError("x has the wrong length");
    if (p.matrix() * *x != *x) throw CertificateError("x is not in Im(P)");
    if (!dot(alpha, *x).is_one()) throw CertificateError("alpha(x) = " + dot(alpha, *x).to_string() + ", not 1");
    found = *x;
  } else {
    Random rng(budget.seed);
    RandomShape shape;
    shape.var_degree = budget.degree;
    shape.coeff_range = 3;
    shape.fractions = ring->coeff().kind == CoeffKind::Rationals;
    for (std::size_t c = 0; c < budget.candidates && !found; ++c) {
      std::vector<Element> v(p.size(), Element(ring));
      if (c < p.size()) {
        v[c] = ring->one();
      } else {
        shape.terms = static_cast<int>(rng.uniform(1, 3));
        for (auto& e : v) e = random_element(rng, ring, shape);
      }
      ++cert.candidates_tried;
      auto w = p.matrix() * v;
      Element val = dot(alpha, w);
      if (val.is_one()) {
        found = w;
      } else if (auto inv = inverse(val)) {
        // A unit value rescales to 1.
        for (auto& e : w) e = e * *inv;
        found = w;
      }
    }
  }
  if (!found) return cert;
  cert.status = SectionStatus::Established;
  cert.x = *found;
  // alpha(a x) = a with a a fresh variable.
  std::string a = fresh_name(ring, "a");
  Ring big = adjoin_vars(ring, {a});
  Element ga = big->sym(a);
  Element s(big);
  for (std::size_t i = 0; i < alpha.size(); ++i) s += lift(alpha[i], big) * ga * lift(cert.x[i], big);
  if (s != ga) throw CertificateError("alpha(a x) = " + s.to_string() + " differs from a");
  cert.identity = "alpha(" + a + " x) = " + s.to_string();
  return cert;
}

Projector tensor_projector(const Projector& p, const Projector& r) {
  if (!same_ring(p.ring(), r.ring())) throw RingMismatch("tensor product of projectors over different rings");
  return Projector(p.matrix().kron(r.matrix()));
}

Projector dual_projector(const Projector& p) { return Projector(p.matrix().transpose()); }

PrincipalGenerator principal_generator_in_ufd(const std::vector<Element>& gens, const std::vector<Fraction>& forms,
                                              const std::vector<Element>& partition,
                                              const std::vector<std::vector<Element>>& partition_in_gens) {
  if (gens.empty()) throw PreconditionError("the ideal needs at least one generator");
  const Ring& ring = gens.front().ring();
  if (!is_ufd_layer(ring)) throw PreconditionError("principalization needs a polynomial ring over Z or a field");
  if (forms.size() != partition.size()) throw PreconditionError("forms and partition differ in length");
  if (!partition_in_gens.empty() && partition_in_gens.size() != partition.size()) {
    throw PreconditionError("partition coordinates differ in length from the partition");
  }
  const std::size_t n = forms.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (forms[i].den.is_zero()) throw CertificateError("form " + std::to_string(i) + " has denominator 0");
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (!divides(forms[i].den, forms[i].num * gens[j])) {
        throw CertificateError("xi_" + std::to_string(i) + " * " + gens[j].to_string() + " is not in the ring");
      }
    }
  }
  // Coordinates of each x_i on the generators.
  std::vector<std::vector<Element>> coords(n, std::vector<Element>(gens.size(), Element(ring)));
  for (std::size_t i = 0; i < n; ++i) {
    if (!partition_in_gens.empty()) {
      if (partition_in_gens[i].size() != gens.size()) throw PreconditionError("bad partition coordinates");
      Element s(ring);
      for (std::size_t j = 0; j < gens.size(); ++j) s += partition_in_gens[i][j] * gens[j];
      if (s != partition[i]) throw CertificateError("partition coordinates do not reproduce x_" + std::to_string(i));
      coords[i] = partition_in_gens[i];
      continue;
    }
    bool placed = partition[i].is_zero();
    for (std::size_t j = 0; j < gens.size() && !placed; ++j) {
      if (auto q = try_divide(partition[i], gens[j])) {
        coords[i][j] = *q;
        placed = true;
      }
    }
    if (!placed) {
      throw CertificateError("x_" + std::to_string(i) + " = " + partition[i].to_string() +
                             " is not shown to lie in the ideal");
    }
  }
  Element total(ring);
  for (std::size_t i = 0; i < n; ++i) total += exact_divide(forms[i].num * partition[i], forms[i].den);
  if (!total.is_one()) throw CertificateError("sum xi_i x_i = " + total.to_string() + ", not 1");

  PrincipalGenerator out;
  Element d = ring->one();
  for (const auto& f : forms) {
    Element c = f.num.is_zero() ? ring->one() : normalize_associate(exact_divide(f.den, gcd_ufd(f.num, f.den)));
    out.conductors.push_back(c);
    d = lcm_ufd(d, c);
  }
  out.generator = d;
  out.membership.assign(gens.size(), Element(ring));
  for (std::size_t i = 0; i < n; ++i) {
    Element dxi = exact_divide(d * forms[i].num, forms[i].den);
    for (std::size_t j = 0; j < gens.size(); ++j) out.membership[j] += dxi * coords[i][j];
  }
  Element check(ring);
  for (std::size_t j = 0; j < gens.size(); ++j) check += out.membership[j] * gens[j];
  if (check != d) throw CertificateError("membership certificate does not reconstruct the generator");
  for (const auto& g : gens) {
    auto q = try_divide(g, d);
    if (!q) throw CertificateError(d.to_string() + " does not divide " + g.to_string());
    out.quotients.push_back(*q);
  }
  return out;
}

Report universal_nonfreeness_suite(const UniversalSuiteOptions& opt) {
  Report rep("universal");
  const Ring a = universal_ring();
  const Element x = a->sym("x");
  const Element y = a->sym("y");
  const Element z = a->sym("z");

  rep.guarded("projector", "f = [[x, z], [y, 1-x]] has Tr 1, det 0, f^2 = f", [&] {
    Projector f = universal_projector();
    bool ok = is_rank_one_projector_2x2(f.matrix());
    rep.check("projector", "f = [[x, z], [y, 1-x]] has Tr 1, det 0, f^2 = f", ok,
              {{"det", f.matrix().determinant().to_string()}, {"trace", f.matrix().trace().to_string()}});
  });

  rep.guarded("norm-x", "N(x) = N(1-x) = yz", [&] {
    Element n1 = trace_and_norm(x, 0).second;
    Element n2 = trace_and_norm(1 - x, 0).second;
    rep.check("norm-x", "N(x) = N(1-x) = yz", n1 == y * z && n2 == y * z,
              {{"N(x)", n1.to_string()}, {"N(1-x)", n2.to_string()}});
  });

  rep.guarded("norm-identity", "4 N(alpha + beta x) = (2 alpha + beta)^2 + beta^2 (4yz - 1)", [&] {
    Ring big = adjoin_vars(a, {"alpha", "beta"});
    Element al = big->sym("alpha");
    Element be = big->sym("beta");
    Element n = trace_and_norm(al + be * big->sym("x"), 0).second;
    Element lhs = n * Scalar(4);
    Element rhs = (al * Scalar(2) + be).pow(2) + be.pow(2) * (big->parse("4*y*z - 1"));
    rep.check("norm-identity", "4 N(alpha + beta x) = (2 alpha + beta)^2 + beta^2 (4yz - 1)", lhs == rhs,
              {{"N(alpha + beta x)", n.to_string()}});
  });

  rep.guarded("gcd", "y = gcd(y^2, yz), z = gcd(yz, z^2), gcd(y, z) = 1", [&] {
    Ring p = RingTower::create({CoeffDomain::integers(), std::nullopt, {"y", "z"}, {}});
    Element g1 = gcd_ufd(p->parse("y^2"), p->parse("y*z"));
    Element g2 = gcd_ufd(p->parse("y*z"), p->parse("z^2"));
    Element g3 = gcd_ufd(p->parse("y"), p->parse("z"));
    bool ok = g1 == p->sym("y") && g2 == p->sym("z") && g3.is_one();
    rep.check("gcd", "y = gcd(y^2, yz), z = gcd(yz, z^2), gcd(y, z) = 1", ok,
              {{"gcd(y^2,yz)", g1.to_string()}, {"gcd(yz,z^2)", g2.to_string()}, {"gcd(y,z)", g3.to_string()}});
  });

  rep.guarded("norm-y", "N(y) = y^2 != y", [&] {
    Element n = trace_and_norm(y, 0).second;
    rep.check("norm-y", "N(y) = y^2 != y", n == y * y && n != y, {{"N(y)", n.to_string()}});
  });

  // Random candidates alpha + beta x with N = n y would make y x-torsion free.
  Random rng(opt.seed);
  RandomShape shape;
  shape.var_degree = opt.degree;
  shape.coeff_range = 4;
  shape.use_generators = false;
  std::vector<std::pair<Element, Element>> cands;
  rep.guarded("random-norms", "N(alpha + beta x) != n y for |n| <= 5", [&] {
    std::optional<Json> witness;
    for (std::size_t c = 0; c < opt.candidates; ++c) {
      shape.terms = static_cast<int>(rng.uniform(1, 4));
      Element al = random_element(rng, a, shape);
      Element be = random_element(rng, a, shape);
      cands.emplace_back(al, be);
      Element n = trace_and_norm(al + be * x, 0).second;
      for (int k = -5; k <= 5 && !witness; ++k) {
        if (k != 0 && n == y * Scalar(k)) {
          witness = Json{{"alpha", al.to_string()}, {"beta", be.to_string()}, {"n", k}};
        }
      }
    }
    Status st = witness ? Status::Fail : (opt.candidates == 0 ? Status::Inconclusive : Status::Pass);
    rep.add("random-norms", "N(alpha + beta x) != n y for |n| <= 5", st,
            witness ? *witness : Json{{"candidates", opt.candidates}});
  });

  // Sign obstruction at real points of 4yz - 1 >= 0.
  rep.guarded("sign-obstruction", "(2 alpha + beta)^2 + beta^2 (4yz - 1) >= 0 > 4 n y at y < 0, 4yz >= 1", [&] {
    std::vector<std::pair<Scalar, Scalar>> pts{{Scalar(-1, 2), Scalar(-1, 2)}};
    Random prng(opt.seed + 1);
    while (pts.size() < opt.points) {
      Scalar yy(-prng.uniform(1, 20), prng.uniform(1, 10));
      yy.canonicalize();
      Scalar zz = Scalar(1) / (yy * 4) - Scalar(Scalar(prng.uniform(0, 10)) / prng.uniform(1, 5));
      zz.canonicalize();
      pts.emplace_back(yy, zz);
    }
    std::optional<Json> witness;
    std::size_t evaluated = 0;
    for (const auto& [yy, zz] : pts) {
      if (yy * zz * 4 - 1 < 0 || yy >= 0) continue;
      for (std::size_t c = 0; c < std::min<std::size_t>(cands.size(), 20) && !witness; ++c) {
        auto ev = [&](const Element& e) {
          Scalar v = 0;
          for (const auto& [ex, co] : e.terms()) {
            Scalar m = co;
            for (int k = 0; k < ex[0]; ++k) m *= yy;
            for (int k = 0; k < ex[1]; ++k) m *= zz;
            v += m;
          }
          return v;
        };
        Scalar al = ev(cands[c].first);
        Scalar be = ev(cands[c].second);
        Scalar lhs = (2 * al + be) * (2 * al + be) + be * be * (4 * yy * zz - 1);
        ++evaluated;
        for (int n = 1; n <= 5; ++n) {
          if (!(lhs >= 0 && 4 * n * yy < 0)) {
            witness = Json{{"y", yy.get_str()}, {"z", zz.get_str()}, {"n", n}};
          }
        }
      }
    }
    rep.check("sign-obstruction", "(2 alpha + beta)^2 + beta^2 (4yz - 1) >= 0 > 4 n y at y < 0, 4yz >= 1",
              !witness, witness ? *witness : Json{{"points", pts.size()}, {"evaluations", evaluated}});
  });
  return rep;
}

}  // namespace picard
