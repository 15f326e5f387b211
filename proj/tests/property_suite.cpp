#include "property_suite.hpp"

#include <functional>
#include <string>

#include "picard/arith.hpp"
#include "picard/galois.hpp"
#include "picard/kummer.hpp"
#include "picard/projective.hpp"
#include "picard/quadratic_forms.hpp"
#include "picard/random.hpp"

namespace picard::props {

namespace {

Ring make(const CoeffDomain& dom, std::vector<std::string> vars,
          std::vector<std::pair<std::string, std::string>> ext = {}) {
  TowerSpec spec;
  spec.coeff = dom;
  spec.vars = std::move(vars);
  spec.extensions = std::move(ext);
  return RingTower::create(spec);
}

// Runs body(k) for k < cases; the first returned counterexample fails the check.
void run(Report& rep, const std::string& id, const std::string& anchor, std::size_t cases,
         const std::function<std::optional<Json>(std::size_t)>& body) {
  rep.guarded(id, anchor, [&] {
    for (std::size_t k = 0; k < cases; ++k)
      if (auto bad = body(k)) {
        (*bad)["case"] = k;
        rep.check(id, anchor, false, *bad);
        return;
      }
    rep.check(id, anchor, true, {{"cases", cases}});
  });
}

Element nonzero(Random& rng, const Ring& r, const RandomShape& shape = {}) {
  for (;;) {
    Element e = random_element(rng, r, shape);
    if (!e.is_zero()) return e;
  }
}

}  // namespace

Report property_suite(std::uint64_t seed, std::size_t cases) {
  Report rep("properties");
  Random rng(seed);

  std::vector<Ring> rings{make(CoeffDomain::rationals(), {"x", "y"}),
                          make(CoeffDomain::integers(), {"x"}),
                          circle_ring(),
                          complex_circle_ring(),
                          universal_ring(),
                          f25_action().ring(),
                          make(CoeffDomain::prime_field(7), {"u"}, {{"v", "v^3 - u*v - 1"}})};

  run(rep, "ring-axioms", "(ab)c = a(bc), ab = ba, a(b + c) = ab + ac, a + 0 = a, 1a = a, a - a = 0", cases,
      [&](std::size_t k) -> std::optional<Json> {
        const Ring& r = rings[k % rings.size()];
        RandomShape shape;
        shape.fractions = r->coeff().kind == CoeffKind::Rationals;
        Element a = random_element(rng, r, shape), b = random_element(rng, r, shape), c = random_element(rng, r, shape);
        bool ok = (a * b) * c == a * (b * c) && a * b == b * a && a * (b + c) == a * b + a * c && a + r->zero() == a &&
                  r->one() * a == a && (a - a).is_zero() && a + (b + c) == (a + b) + c;
        if (ok) return std::nullopt;
        return Json{{"a", a.to_string()}, {"b", b.to_string()}, {"c", c.to_string()}};
      });

  std::vector<Ring> ext_rings{universal_ring(), complex_circle_ring(), f25_action().ring(), gaussian_action().ring()};
  run(rep, "norm-multiplicative", "N(ab) = N(a) N(b), Tr(a + b) = Tr a + Tr b, Tr(qa) = q Tr a", cases,
      [&](std::size_t k) -> std::optional<Json> {
        const Ring& r = ext_rings[k % ext_rings.size()];
        std::size_t top = r->ngens() - 1;
        Element a = random_element(rng, r), b = random_element(rng, r);
        Scalar q = rng.scalar(r->coeff(), 5, true);
        auto [ta, na] = trace_and_norm(a, top);
        auto [tb, nb] = trace_and_norm(b, top);
        auto [tab, nab] = trace_and_norm(a * b, top);
        auto [ts, ns] = trace_and_norm(a + b, top);
        auto [tq, nq] = trace_and_norm(a * q, top);
        (void)ns;
        (void)nq;
        (void)tab;
        if (nab == na * nb && ts == ta + tb && tq == ta * q) return std::nullopt;
        return Json{{"a", a.to_string()}, {"b", b.to_string()}, {"N(ab)", nab.to_string()}};
      });

  std::vector<Ring> ufd{make(CoeffDomain::integers(), {"x", "y"}), make(CoeffDomain::prime_field(7), {"x"}),
                        make(CoeffDomain::rationals(), {"x", "y"})};
  run(rep, "gcd-divisibility", "g = gcd(ac, bc) divides ac and bc, and c divides g", cases,
      [&](std::size_t k) -> std::optional<Json> {
        const Ring& r = ufd[k % ufd.size()];
        RandomShape shape;
        shape.terms = 3;
        Element a = nonzero(rng, r, shape), b = nonzero(rng, r, shape), c = nonzero(rng, r, shape);
        Element g = gcd_ufd(a * c, b * c);
        if (divides(g, a * c) && divides(g, b * c) && divides(c, g) && gcd_ufd(g, r->zero()) == normalize_associate(g))
          return std::nullopt;
        return Json{{"a", a.to_string()}, {"b", b.to_string()}, {"c", c.to_string()}, {"g", g.to_string()}};
      });

  Ring zx = make(CoeffDomain::integers(), {"x"});
  Ring qi = gaussian_action().ring();
  Ring f25 = f25_action().ring();
  run(rep, "unit-inverse", "e e^-1 = 1 in fields; non-constant elements of Z[x] are not units", cases,
      [&](std::size_t k) -> std::optional<Json> {
        if (k % 3 == 2) {
          Element e = zx->sym("x") * nonzero(rng, zx) + Scalar(rng.uniform(-3, 3));
          if (!is_unit(e) && is_unit(zx->constant(-1)) && !is_unit(zx->constant(2))) return std::nullopt;
          return Json{{"e", e.to_string()}};
        }
        const Ring& r = k % 3 ? f25 : qi;
        Element e = nonzero(rng, r);
        auto inv = inverse(e);
        if (inv && e * *inv == r->one()) return std::nullopt;
        return Json{{"e", e.to_string()}};
      });

  // Units of the cover rings: nonzero field elements, and (x + iy)^k c on the complex circle.
  GroupAction gauss = gaussian_action();
  GroupAction frob = f25_action();
  GroupAction circle = complex_circle_action();
  auto random_unit = [&](const GroupAction& act) {
    const Ring& b = act.ring();
    if (&act != &circle) return nonzero(rng, b);
    Element c = b->constant(Scalar(rng.uniform(1, 5))) + b->sym("i") * Scalar(rng.uniform(-4, 4));
    Element w = rng.coin() ? b->parse("x + i*y") : b->parse("x - i*y");
    return c * w.pow(static_cast<unsigned>(rng.uniform(0, 3)));
  };
  std::vector<const GroupAction*> actions{&gauss, &frob, &circle};
  run(rep, "cocycle-closure", "coboundaries form a subgroup: d(u) d(v) = d(uv), d(u)^-1 = d(u^-1)", cases,
      [&](std::size_t k) -> std::optional<Json> {
        const GroupAction& act = *actions[k % actions.size()];
        Element u = random_unit(act), v = random_unit(act);
        Cocycle cu = coboundary(act, u), cv = coboundary(act, v);
        Cocycle prod = verify_cocycle(act, (cu * cv).theta);
        Cocycle inv = verify_cocycle(act, cu.inverse().theta);
        if (prod == coboundary(act, u * v) && inv == coboundary(act, *inverse(u))) return std::nullopt;
        return Json{{"u", u.to_string()}, {"v", v.to_string()}};
      });

  // Members of L_theta: u a for theta = d(u); m^k a for the Moebius cocycle theta^k.
  KummerAlgebra f5 = f5_kummer();
  const Ring& cb = circle.ring();
  Cocycle mob = verify_cocycle(circle, {{"s", cb->parse("x + i*y")}});
  Element m_pos = cb->parse("1 + x + i*y"), m_neg = cb->parse("1 + x - i*y");
  auto mob_power = [&](int e) {
    Cocycle c = trivial_cocycle(circle);
    for (int j = 0; j < (e < 0 ? -e : e); ++j) c = c * (e < 0 ? mob.inverse() : mob);
    return c;
  };
  auto mob_member = [&](int e) { return (e < 0 ? m_neg : m_pos).pow(static_cast<unsigned>(e < 0 ? -e : e)); };
  auto base_elem = [&](const GroupAction& act) {
    RandomShape shape;
    shape.var_degree = 1;
    return act.from_base(random_element(rng, act.base(), shape));
  };
  run(rep, "grading", "L_theta L_theta' is contained in L_{theta theta'}", cases,
      [&](std::size_t k) -> std::optional<Json> {
        Element b1, b2;
        std::optional<Cocycle> target;
        switch (k % 3) {
          case 0: {
            Element u = random_unit(gauss), v = random_unit(gauss);
            b1 = u * base_elem(gauss);
            b2 = v * base_elem(gauss);
            target = coboundary(gauss, u) * coboundary(gauss, v);
            break;
          }
          case 1: {
            int e1 = static_cast<int>(rng.uniform(-2, 2)), e2 = static_cast<int>(rng.uniform(-2, 2));
            b1 = mob_member(e1) * base_elem(circle);
            b2 = mob_member(e2) * base_elem(circle);
            target = mob_power(e1) * mob_power(e2);
            break;
          }
          default: {
            const auto& comps = f5.decomposition.components;
            std::size_t i = static_cast<std::size_t>(rng.uniform(0, 3)), j = static_cast<std::size_t>(rng.uniform(0, 3));
            b1 = comps[i].basis[0] * base_elem(f5.action);
            b2 = comps[j].basis[0] * base_elem(f5.action);
            target = comps[f5.decomposition.characters.product(i, j)].module.cocycle;
          }
        }
        if (in_cocycle_module(*target, b1 * b2)) return std::nullopt;
        return Json{{"b1", b1.to_string()}, {"b2", b2.to_string()}, {"theta", target->to_json()}};
      });

  Ring z = make(CoeffDomain::integers(), {});
  run(rep, "nu-multiplicative", "F(w z) = (p^2 - D q^2) F(z) for w = p + qT", cases,
      [&](std::size_t) -> std::optional<Json> {
        auto num = [&] { return z->constant(Scalar(rng.uniform(-6, 6))); };
        BinaryQuadraticForm f{z, num(), num(), num()};
        QFModule m = module_from_form(f);
        Element p = num(), q = num(), x = num(), y = num();
        auto wz = m.action(m.element(p, q)) * std::vector<Element>{x, y};
        Element lhs = f(wz[0], wz[1]);
        Element rhs = (p * p - f.discriminant() * q * q) * f(x, y);
        if (lhs == rhs) return std::nullopt;
        return Json{{"form", f.to_string()}, {"p", p.to_string()}, {"q", q.to_string()}};
      });

  return rep;
}

}  // namespace picard::props
