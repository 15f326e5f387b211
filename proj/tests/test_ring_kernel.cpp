#include <gtest/gtest.h>

#include "picard/arith.hpp"
#include "picard/errors.hpp"
#include "picard/hom.hpp"
#include "picard/localization.hpp"
#include "picard/projective.hpp"
#include "picard/serialize.hpp"

using namespace picard;

namespace {

Ring make(const CoeffDomain& dom, std::vector<std::string> vars, std::vector<std::pair<std::string, std::string>> ext = {}) {
  TowerSpec spec;
  spec.coeff = dom;
  spec.vars = std::move(vars);
  spec.extensions = std::move(ext);
  return RingTower::create(spec);
}

}  // namespace

TEST(NormalForm, CircleRelation) {
  Ring a = circle_ring();
  EXPECT_EQ(a->parse("y^2"), a->parse("1 - x^2"));
  EXPECT_EQ(a->parse("y^3"), a->parse("y - x^2*y"));
}

TEST(NormalForm, UniversalRelation) {
  Ring u = universal_ring();
  EXPECT_EQ(u->parse("x^2"), u->parse("x - y*z"));
}

TEST(NormalForm, ZeroIsEmpty) {
  Ring a = circle_ring();
  Element z = a->parse("0 + 0*y");
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.terms().empty());
}

TEST(NormalForm, ExponentsFullyReduced) {
  Ring a = circle_ring();
  Element e = a->parse("(x + y)^5");
  for (const auto& [ex, c] : e.terms()) {
    EXPECT_LT(ex[1], 2);
    EXPECT_NE(c, 0);
  }
}

TEST(Presentation, RejectsBadInput) {
  EXPECT_THROW(CoeffDomain::prime_field(4), PresentationError);
  EXPECT_THROW(make(CoeffDomain::rationals(), {"x", "x"}), PresentationError);
  EXPECT_THROW(make(CoeffDomain::rationals(), {"x"}, {{"y", "2*y^2 - x"}}), PresentationError);
  EXPECT_THROW(circle_ring()->parse("x +"), PresentationError);
  EXPECT_THROW(circle_ring()->parse("q"), PresentationError);
}

TEST(Presentation, JsonRoundTrip) {
  for (const Ring& r : {circle_ring(), universal_ring(), complex_circle_ring()}) {
    Ring back = ring_from_json(ring_to_json(r));
    EXPECT_TRUE(*back == *r);
    Element e = r->parse("x*y + 3*x - 1");
    EXPECT_EQ(lift(element_from_json(back, element_to_json(e)), r), e);
  }
}

TEST(ApplyHom, SquaringMap) {
  Ring a = circle_ring();
  Ring t = squaring_target_ring();
  RingHom alpha = RingHom::from_strings(a, t, {{"x", "xi^2 - eta^2"}, {"y", "2*xi*eta"}});
  EXPECT_EQ(alpha(a->parse("1 + x")), t->parse("2*xi^2"));
}

TEST(ApplyHom, IdentityAndSigma) {
  Ring a = circle_ring();
  Element e = a->parse("x^2 + 3*x*y - y + 7");
  EXPECT_EQ(RingHom::identity(a)(e), e);
  RingHom sigma = RingHom::from_strings(a, a, {{"y", "-y"}});
  EXPECT_EQ(sigma(a->parse("x^2 + 1 + y*(x - 2)")), a->parse("x^2 + 1 - y*(x - 2)"));
}

TEST(ApplyHom, RejectsNonHomomorphism) {
  Ring a = circle_ring();
  EXPECT_THROW(RingHom::from_strings(a, a, {{"y", "2*y"}}), InvalidHomomorphism);
}

TEST(TraceNorm, CircleY) {
  Ring a = circle_ring();
  auto [tr, n] = trace_and_norm(a->sym("y"), 0);
  EXPECT_EQ(n, a->parse("x^2 - 1"));
  EXPECT_TRUE(tr.is_zero());
}

TEST(TraceNorm, UniversalLinear) {
  Ring r = make(CoeffDomain::integers(), {"a", "b", "y", "z"}, {{"x", "x^2 - x + y*z"}});
  auto [tr, n] = trace_and_norm(r->parse("a + b*x"), 0);
  EXPECT_EQ(n, r->parse("a^2 + a*b + b^2*y*z"));
  EXPECT_EQ(tr, r->parse("2*a + b"));
}

TEST(TraceNorm, One) {
  Ring r = complex_circle_ring();
  auto [tr, n] = trace_and_norm(r->one(), r->ngens() - 1);
  EXPECT_EQ(n, r->one());
  EXPECT_EQ(tr, r->constant(2));
}

TEST(Units, ComplexCircle) {
  Ring b = complex_circle_ring();
  auto inv = inverse(b->parse("x + i*y"));
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv, b->parse("x - i*y"));
}

TEST(Units, FieldConstant) {
  Ring q = make(CoeffDomain::rationals(), {"x"});
  auto inv = inverse(q->constant(2));
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv, q->constant(Scalar(1, 2)));
  EXPECT_FALSE(is_unit(q->sym("x")));
}

TEST(Units, OnePlusXIsNot) {
  Ring a = circle_ring();
  EXPECT_FALSE(is_unit(a->parse("1 + x")));
  EXPECT_EQ(trace_and_norm(a->parse("1 + x"), 0).second, a->parse("(1 + x)^2"));
}

TEST(Gcd, UniversalExamples) {
  Ring p = make(CoeffDomain::integers(), {"y", "z"});
  EXPECT_EQ(gcd_ufd(p->parse("y^2"), p->parse("y*z")), p->sym("y"));
  EXPECT_EQ(gcd_ufd(p->sym("y"), p->sym("z")), p->one());
  Element a = p->parse("-2*y*z + 4*y");
  EXPECT_EQ(gcd_ufd(p->zero(), a), normalize_associate(a));
}

TEST(Gcd, Univariate) {
  Ring q = make(CoeffDomain::rationals(), {"x"});
  Element g = gcd_ufd(q->parse("x^3 - 1"), q->parse("x^2 - 1"));
  EXPECT_EQ(g, q->parse("x - 1"));
  ExtGcd e = ext_gcd(q->parse("x^3 - 1"), q->parse("x^2 + 1"));
  EXPECT_EQ(e.u * q->parse("x^3 - 1") + e.v * q->parse("x^2 + 1"), e.g);
}

TEST(Localization, Equalities) {
  Ring z = make(CoeffDomain::integers(), {});
  Element two = z->constant(2);
  EXPECT_TRUE(localized_equal({z->constant(6), two, 1}, {z->constant(3), two, 0}));
  EXPECT_FALSE(localized_equal({z->one(), two, 1}, {z->one(), two, 2}));
  Ring u = universal_ring();
  Element x = u->sym("x"), y = u->sym("y"), zz = u->sym("z");
  EXPECT_TRUE(localized_equal({y, x, 1}, {1 - x, zz, 1}));
}

TEST(Localization, Inverse) {
  Ring z = make(CoeffDomain::integers(), {});
  auto inv = localized_inverse({z->constant(4), z->constant(2), 0});
  ASSERT_TRUE(inv);
  EXPECT_TRUE(localized_equal(*inv, {z->one(), z->constant(2), 2}));
  EXPECT_FALSE(localized_inverse({z->constant(3), z->constant(2), 0}));
}

TEST(Bezout, Examples) {
  Ring a = circle_ring();
  Scalar half(1, 2);
  EXPECT_TRUE(verify_bezout({{a->parse("1 + x"), a->parse("1 - x")}, {a->constant(half), a->constant(half)}}));
  Ring t = squaring_target_ring();
  EXPECT_TRUE(verify_bezout({{t->sym("xi"), t->sym("eta")}, {t->sym("xi"), t->sym("eta")}}));
  EXPECT_FALSE(verify_bezout({{a->sym("x")}, {a->one()}}));
  EXPECT_THROW(BezoutCertificate::certified({a->sym("x")}, {a->one()}), CertificateError);
}

TEST(Bezout, Search) {
  Ring z = make(CoeffDomain::integers(), {});
  auto c = find_bezout({z->constant(4), z->constant(9)});
  ASSERT_TRUE(c);
  EXPECT_TRUE(verify_bezout(*c));
  EXPECT_FALSE(find_bezout({z->constant(4), z->constant(6)}));
}

TEST(Matrix, DeterminantAndInverse) {
  Ring q = make(CoeffDomain::rationals(), {"x"});
  Matrix m = Matrix::parse(q, {{"1", "x"}, {"0", "2"}});
  EXPECT_EQ(m.determinant(), q->constant(2));
  auto inv = inverse_matrix(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(m * *inv, Matrix::identity(q, 2));
  EXPECT_FALSE(inverse_matrix(Matrix::parse(q, {{"x", "0"}, {"0", "1"}})));
}
