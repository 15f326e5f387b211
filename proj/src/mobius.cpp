#include "picard/mobius.hpp"

#include "picard/arith.hpp"
#include "picard/errors.hpp"
#include "picard/hom.hpp"
#include "picard/localization.hpp"
#include "picard/projective.hpp"
#include "picard/random.hpp"

namespace picard {

Report mobius_suite(const MobiusOptions& opt) {
  Report rep("mobius");
  const Ring a = circle_ring();
  const Element x = a->sym("x");
  const Element y = a->sym("y");
  const Matrix q = opt.q_override ? *opt.q_override : mobius_projector().matrix();

  rep.guarded("idempotent", "Q^2 = Q, Tr(Q) = 1, det(Q) = 0", [&] {
    Matrix defect = q * q - q;
    Element tr = q.trace();
    Element det = q.determinant();
    bool ok = defect.is_zero() && tr.is_one() && det.is_zero();
    Json w{{"trace", tr.to_string()}, {"det", det.to_string()}};
    if (!defect.is_zero()) w["Q^2 - Q"] = defect.to_string();
    rep.check("idempotent", "Q^2 = Q, Tr(Q) = 1, det(Q) = 0", ok, w);
  });

  rep.guarded("complement", "Q (1 - Q) = 0 and Q + (1 - Q) = 1", [&] {
    Complement c = complement_decomposition(Projector(q));
    rep.check("complement", "Q (1 - Q) = 0 and Q + (1 - Q) = 1", c.products_vanish && c.sums_to_identity);
  });

  rep.guarded("image-is-ideal", "I = pr1(M): first row of Q is (1+x)/2, y/2", [&] {
    bool ok = q(0, 0) == (x + 1) * Scalar(1, 2) && q(0, 1) == y * Scalar(1, 2);
    rep.check("image-is-ideal", "I = pr1(M): first row of Q is (1+x)/2, y/2", ok,
              {{"row", Json::array({q(0, 0).to_string(), q(0, 1).to_string()})}});
  });

  rep.guarded("kernel-meets-M", "(0, a) in M forces ya = 0, (1+x)a = 0, hence a = 0", [&] {
    // Generic a as a fresh variable: (Q - 1)(0, a) = (ya/2, -(1+x)a/2).
    Ring big = adjoin_vars(a, {"a"});
    Element ga = big->sym("a");
    Matrix qb = q.lift_to(big);
    auto v = (qb - Matrix::identity(big, 2)) * std::vector<Element>{big->zero(), ga};
    Element yb = big->sym("y");
    Element xb = big->sym("x");
    bool eqs = v[0] == yb * ga * Scalar(1, 2) && v[1] == -(xb + 1) * ga * Scalar(1, 2);
    // a = x(xa) + y(ya), and y is not a zero divisor (its norm x^2 - 1 is non-zero).
    bool identity = xb * (xb * ga) + yb * (yb * ga) == ga;
    Element ny = trace_and_norm(y, 0).second;
    bool ok = eqs && identity && !ny.is_zero();
    rep.check("kernel-meets-M", "(0, a) in M forces ya = 0, (1+x)a = 0, hence a = 0", ok,
              {{"(Q-1)(0,a)", Json::array({v[0].to_string(), v[1].to_string()})},
               {"a = x(xa) + y(ya)", identity},
               {"N(y)", ny.to_string()}});
  });

  rep.guarded("I-squared", "I^2 = (1+x): generators are multiples of 1+x and 1+x = (1+x)^2/2 + y^2/2", [&] {
    Element g = x + 1;
    std::vector<Element> gens{g * g, g * y, y * y};
    Json quotients = Json::array();
    bool ok = true;
    for (const auto& h : gens) {
      auto qq = try_divide(h, g);
      ok = ok && qq.has_value();
      quotients.push_back(qq ? qq->to_string() : "none");
    }
    ok = ok && gens[0] * Scalar(1, 2) + gens[2] * Scalar(1, 2) == g;
    BezoutCertificate cover{{x + 1, 1 - x}, {a->constant(Scalar(1, 2)), a->constant(Scalar(1, 2))}};
    ok = ok && verify_bezout(cover);
    rep.check("I-squared", "I^2 = (1+x): generators are multiples of 1+x and 1+x = (1+x)^2/2 + y^2/2", ok,
              {{"quotients", quotients}, {"cover", "(1+x)/2 + (1-x)/2 = 1"}});
  });

  Random rng(opt.seed);
  rep.guarded("degree-obstruction", "deg(p^2 + (x^2 - 1) q^2) != 1 for p, q in Q[x] of degree <= 4", [&] {
    RandomShape shape;
    shape.var_degree = 4;
    shape.coeff_range = 6;
    shape.fractions = true;
    shape.use_generators = false;
    std::optional<Json> witness;
    for (std::size_t c = 0; c < opt.samples && !witness; ++c) {
      shape.terms = static_cast<int>(rng.uniform(1, 5));
      Element p = random_element(rng, a, shape);
      Element r = random_element(rng, a, shape);
      Element n = trace_and_norm(p + y * r, 0).second;
      if (n.degree_in_var(0) == 1) witness = Json{{"p", p.to_string()}, {"q", r.to_string()}};
    }
    rep.add("degree-obstruction", "deg(p^2 + (x^2 - 1) q^2) != 1 for p, q in Q[x] of degree <= 4",
            witness ? Status::Fail : (opt.samples ? Status::Pass : Status::Inconclusive),
            witness ? *witness : Json{{"samples", opt.samples}});
  });

  rep.guarded("non-principal", "I = aA would force deg N(a) = 1; sampled candidates all have deg N(a) != 1", [&] {
    // I = aA gives a^2 = (1+x) b with b a unit, so N(a)^2 = (1+x)^2 N(b), N(b) constant.
    std::size_t sampled = 0;
    std::optional<Json> witness;
    if (opt.degree_bound >= 1) {
      RandomShape shape;
      shape.var_degree = opt.degree_bound;
      shape.coeff_range = 5;
      shape.fractions = true;
      shape.use_generators = false;
      for (std::size_t c = 0; c < opt.samples && !witness; ++c) {
        shape.terms = static_cast<int>(rng.uniform(1, 4));
        Element cand = random_element(rng, a, shape) + y * random_element(rng, a, shape);
        if (cand.is_zero()) continue;
        ++sampled;
        Element n = trace_and_norm(cand, 0).second;
        if (n.degree_in_var(0) == 1) witness = Json{{"a", cand.to_string()}, {"N(a)", n.to_string()}};
      }
    }
    Element n1 = trace_and_norm(x + 1, 0).second;
    Status st = witness ? Status::Fail : (sampled == 0 ? Status::Inconclusive : Status::Pass);
    rep.add("non-principal", "I = aA would force deg N(a) = 1; sampled candidates all have deg N(a) != 1", st,
            witness ? *witness : Json{{"sampled", sampled}, {"N(1+x)", n1.to_string()}});
  });

  rep.guarded("squaring-map", "alpha(x) = xi^2 - eta^2, alpha(y) = 2 xi eta; alpha(I)A = xi A; alpha(Q) = (xi, eta)^T (xi, eta)", [&] {
    const Ring b = squaring_target_ring();
    RingHom alpha = RingHom::from_strings(a, b, {{"x", "xi^2 - eta^2"}, {"y", "2*xi*eta"}});
    Element xi = b->sym("xi");
    Element eta = b->sym("eta");
    Element g1 = alpha(x + 1);
    Element g2 = alpha(y);
    bool gens = g1 == xi * xi * Scalar(2) && g2 == xi * eta * Scalar(2);
    bool divisible = divides(xi, g1) && divides(xi, g2);
    bool membership = xi * Scalar(1, 2) * g1 + eta * Scalar(1, 2) * g2 == xi;
    Matrix aq = q.map(alpha);
    Matrix outer = Matrix::from_rows(b, {{xi * xi, xi * eta}, {xi * eta, eta * eta}});
    bool ok = gens && divisible && membership && aq == outer;
    rep.check("squaring-map", "alpha(x) = xi^2 - eta^2, alpha(y) = 2 xi eta; alpha(I)A = xi A; alpha(Q) = (xi, eta)^T (xi, eta)",
              ok,
              {{"alpha(1+x)", g1.to_string()},
               {"alpha(y)", g2.to_string()},
               {"xi", "xi/2 * alpha(1+x) + eta/2 * alpha(y)"},
               {"alpha(Q)", aq.to_string()}});
  });

  rep.guarded("complex-generator", "1+x = (1+x-iy)(1+x+iy)/2 and y = (1-x+iy)(1+x+iy)/(2i)", [&] {
    const Ring c = complex_circle_ring();
    Element b = c->parse("1 + x + i*y");
    Element e1 = c->parse("(1 + x - i*y)*(1 + x + i*y)/2");
    Element e2 = c->parse("(1 - x + i*y)*(1 + x + i*y)") * *inverse(c->parse("2*i"));
    bool ok = e1 == c->parse("1 + x") && e2 == c->sym("y");
    // b generates IB: it divides 1 + x and y, and b = (1 + x) + i y lies in IB.
    ok = ok && divides(b, c->parse("1 + x")) && divides(b, c->sym("y"));
    rep.check("complex-generator", "1+x = (1+x-iy)(1+x+iy)/2 and y = (1-x+iy)(1+x+iy)/(2i)", ok,
              {{"b", b.to_string()}, {"(1+x)/b", exact_divide(c->parse("1 + x"), b).to_string()},
               {"y/b", exact_divide(c->sym("y"), b).to_string()}});
  });
  return rep;
}

}  // namespace picard
