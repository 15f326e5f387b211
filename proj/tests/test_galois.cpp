#include <gtest/gtest.h>

#include "picard/arith.hpp"
#include "picard/errors.hpp"
#include "picard/galois.hpp"
#include "picard/projective.hpp"

using namespace picard;

TEST(Group, Tables) {
  FiniteGroup c4 = FiniteGroup::cyclic(4);
  EXPECT_EQ(c4.mul(3, 2), 1u);
  EXPECT_EQ(c4.inverse(1), 3u);
  EXPECT_EQ(c4.order(2), 2u);
  FiniteGroup k = FiniteGroup::abelian({2, 2});
  EXPECT_EQ(k.size(), 4u);
  for (std::size_t g = 0; g < 4; ++g) EXPECT_EQ(k.mul(g, g), k.identity());
  EXPECT_THROW(FiniteGroup::from_table({"a", "b"}, {{0, 1}, {1, 1}}), Error);
}

TEST(Cover, ComplexCircle) {
  GroupAction act = complex_circle_action();
  GaloisCoverCheck c = verify_galois_cover(act);
  const Ring& b = act.ring();
  EXPECT_EQ(c.rho, Matrix::parse(b, {{"1", "i"}, {"1", "-i"}}));
  EXPECT_EQ(c.det, b->parse("-2*i"));
  EXPECT_TRUE(c.galois());
}

TEST(Cover, ProductCover) {
  TowerSpec spec;
  spec.vars = {"u", "v"};
  Ring a = RingTower::create(spec);
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(verify_galois_cover(product_cover(a, FiniteGroup::cyclic(n))).galois());
  EXPECT_TRUE(verify_galois_cover(product_cover(a, FiniteGroup::abelian({2, 2}))).galois());
}

TEST(Cover, SymmetricNotGalois) {
  GroupAction act = symmetric_action();
  GaloisCoverCheck c = verify_galois_cover(act);
  EXPECT_FALSE(c.galois());
  // X2 - X1 with X1 = s1 - X2
  EXPECT_EQ(c.det * c.det, act.ring()->parse("s1^2 - 4*s2"));
}

TEST(Action, RejectsBadMaps) {
  Ring b = complex_circle_ring();
  EXPECT_THROW(GroupAction::create(b, {"i"}, FiniteGroup::cyclic(2), {{}, {{"i", "i + 1"}}}), Error);
  // i -> -i composed with itself must be the identity: claiming order 3 fails.
  EXPECT_THROW(GroupAction::create(b, {"i"}, FiniteGroup::cyclic(3), {{}, {{"i", "-i"}}, {{"i", "-i"}}}), Error);
}

TEST(Cocycle, Mobius) {
  GroupAction act = complex_circle_action();
  const Ring& b = act.ring();
  Cocycle t = verify_cocycle(act, {{"s", b->parse("x + i*y")}});
  EXPECT_EQ(t(1) * act.apply(1, t(1)), b->one());
  EXPECT_NO_THROW(trivial_cocycle(act));
  EXPECT_THROW(verify_cocycle(act, {{"s", b->sym("x")}}), CertificateError);
}

TEST(Cocycle, Coboundaries) {
  GroupAction g = gaussian_action();
  const Ring& b = g.ring();
  EXPECT_EQ(coboundary(g, b->one()), trivial_cocycle(g));
  EXPECT_EQ(coboundary(g, b->parse("2 + i"))(1), b->parse("(3 + 4*i)/5"));

  GroupAction act = complex_circle_action();
  const Ring& cb = act.ring();
  Element u = cb->parse("1 + x + i*y");
  EXPECT_EQ(cb->parse("x + i*y") * act.apply(1, u), u);
  EXPECT_EQ(cb->parse("1 + x"), cb->parse("(1 + x - i*y)*(1 + x + i*y)/2"));
  EXPECT_THROW(coboundary(act, u), PreconditionError);
}

TEST(Module, Trivial) {
  GroupAction act = complex_circle_action();
  CocycleModule m = cocycle_module(trivial_cocycle(act));
  ASSERT_TRUE(m.found());
  EXPECT_EQ(m.generators, std::vector<Element>{act.ring()->one()});
  EXPECT_TRUE(m.unit_member);
}

TEST(Module, Mobius) {
  GroupAction act = complex_circle_action();
  const Ring& b = act.ring();
  Cocycle t = verify_cocycle(act, {{"s", b->parse("x + i*y")}});
  ModuleSearch s;
  s.unit_budget = 200;
  CocycleModule m = cocycle_module(t, s);
  ASSERT_TRUE(m.found());
  EXPECT_EQ(m.degree, 1);
  EXPECT_TRUE(in_cocycle_module(t, b->parse("1 + x + i*y")));
  EXPECT_FALSE(in_cocycle_module(t, b->one()));
  EXPECT_TRUE(m.dual);
  EXPECT_FALSE(m.unit_member);
}

TEST(Module, Gaussian) {
  GroupAction g = gaussian_action();
  const Ring& b = g.ring();
  Cocycle t = coboundary(g, b->parse("2 + i"));
  CocycleModule m = cocycle_module(t);
  ASSERT_TRUE(m.found());
  EXPECT_TRUE(in_cocycle_module(t, b->parse("2 + i")));
  EXPECT_TRUE(m.unit_member);
}

TEST(Hilbert90, Gaussian) {
  GroupAction g = gaussian_action();
  const Ring& b = g.ring();
  Cocycle t = verify_cocycle(g, {{"s", b->parse("(3 + 4*i)/5")}});
  Hilbert90Witness w = hilbert90_witness(t, {b->one(), b->sym("i")});
  EXPECT_EQ(w.u, t(1) * g.apply(1, w.u));
  // u is a rational multiple of 2 + i
  Element r = w.u * *inverse(b->parse("2 + i"));
  EXPECT_TRUE(g.in_base(r));
}

TEST(Hilbert90, Trivial) {
  GroupAction g = gaussian_action();
  Hilbert90Witness w = hilbert90_witness(trivial_cocycle(g), {g.ring()->one()});
  EXPECT_EQ(w.u, g.ring()->constant(2));
}

TEST(Hilbert90, F25Exhaustive) {
  GroupAction f = f25_action();
  const Ring& b = f.ring();
  std::vector<Element> all;
  for (int p = 0; p < 5; ++p)
    for (int q = 0; q < 5; ++q) all.push_back(b->constant(p) + b->sym("w") * Scalar(q));
  std::size_t norm_one = 0;
  for (const auto& z : all) {
    if (z * f.apply(1, z) != b->one()) continue;
    ++norm_one;
    Cocycle t = verify_cocycle(f, {{"frob", z}});
    Hilbert90Witness w = hilbert90_witness(t, all);
    EXPECT_LE(w.tried, 25u);
    EXPECT_EQ(w.u, z * f.apply(1, w.u));
  }
  EXPECT_EQ(norm_one, 6u);  // |ker N| = (25 - 1) / (5 - 1)
}

TEST(Signature, Examples) {
  TowerSpec spec;
  spec.vars = {"X1", "X2"};
  Ring r2 = RingTower::create(spec);
  EXPECT_EQ(signature_divide(r2->parse("X2 - X1")), r2->one());
  EXPECT_EQ(signature_divide(r2->parse("X2^2 - X1^2")), r2->parse("X1 + X2"));
  spec.vars = {"X1", "X2", "X3"};
  Ring r3 = RingTower::create(spec);
  Element s = r3->parse("X1 + X2 + X3");
  EXPECT_EQ(signature_divide(vandermonde_product(r3) * s), s);
  EXPECT_THROW(signature_divide(r2->parse("X1")), PreconditionError);
}

TEST(Json, ActionRoundTrip) {
  GroupAction act = complex_circle_action();
  GroupAction back = action_from_json(action_to_json(act));
  EXPECT_EQ(back.rank(), 2u);
  EXPECT_EQ(back.group().size(), 2u);
  Cocycle c = cocycle_from_json(back, Json{{"s", "x + i*y"}});
  EXPECT_EQ(c(1), back.ring()->parse("x + i*y"));
}

TEST(Galois, SuitePasses) {
  Report r = galois_suite();
  for (const auto& c : r.checks()) EXPECT_EQ(c.status, Status::Pass) << c.id << " " << c.witness.dump();
}
