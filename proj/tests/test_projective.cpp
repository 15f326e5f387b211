#include <gtest/gtest.h>

#include "picard/arith.hpp"
#include "picard/errors.hpp"
#include "picard/mobius.hpp"
#include "picard/projective.hpp"

using namespace picard;

namespace {

Matrix at(const Projector& p, const EvaluationPoint& pt) { return p.matrix().map(pt.hom()); }

bool all_pass(const Report& r) {
  for (const auto& c : r.checks())
    if (c.status != Status::Pass) return false;
  return true;
}

}  // namespace

TEST(RankOneProjector, Examples) {
  EXPECT_TRUE(is_rank_one_projector_2x2(mobius_projector().matrix()));
  EXPECT_FALSE(is_rank_one_projector_2x2(Matrix::identity(circle_ring(), 2)));
  EXPECT_TRUE(is_rank_one_projector_2x2(universal_projector().matrix()));
}

TEST(MobiusProjector, Identities) {
  Projector q = mobius_projector();
  const Matrix& m = q.matrix();
  EXPECT_EQ(m.trace(), q.ring()->one());
  EXPECT_TRUE(m.determinant().is_zero());
  EXPECT_TRUE((m * m - m).is_zero());
  EXPECT_EQ(m(0, 0), q.ring()->parse("(1 + x)/2"));
  EvaluationPoint p = EvaluationPoint::rational(q.ring(), {{"x", "1"}, {"y", "0"}});
  EXPECT_EQ(at(q, p), Matrix::parse(p.field(), {{"1", "0"}, {"0", "0"}}));
}

TEST(Projector, RejectsNonIdempotent) {
  Ring a = circle_ring();
  EXPECT_THROW(Projector(Matrix::parse(a, {{"1", "x"}, {"0", "1"}})), CertificateError);
  EXPECT_THROW(EvaluationPoint::rational(a, {{"x", "1"}, {"y", "1"}}), InvalidHomomorphism);
}

TEST(UniversalProjector, Points) {
  Projector f = universal_projector();
  EXPECT_TRUE(f.matrix().determinant().is_zero());
  EvaluationPoint o = EvaluationPoint::rational(f.ring(), {{"x", "0"}, {"y", "0"}, {"z", "0"}});
  EvaluationPoint e = EvaluationPoint::rational(f.ring(), {{"x", "1"}, {"y", "0"}, {"z", "0"}});
  EXPECT_EQ(at(f, o), Matrix::parse(o.field(), {{"0", "0"}, {"0", "1"}}));
  EXPECT_EQ(at(f, e), Matrix::parse(e.field(), {{"1", "0"}, {"0", "0"}}));
  EXPECT_EQ(rank_at_point(f, o), 1u);
  EXPECT_EQ(rank_at_point(f, e), 1u);
  EXPECT_EQ(rank_at_point(f, EvaluationPoint::rational(f.ring(), {{"x", "2"}, {"y", "1"}, {"z", "-2"}})), 1u);
}

TEST(Complement, Examples) {
  Complement c = complement_decomposition(mobius_projector());
  EXPECT_TRUE(c.products_vanish);
  EXPECT_TRUE(c.sums_to_identity);
  EXPECT_EQ(c.complement.matrix(), Matrix::identity(circle_ring(), 2) - mobius_projector().matrix());

  Projector zero(Matrix(circle_ring(), 2, 2));
  EXPECT_EQ(complement_decomposition(zero).complement.matrix(), Matrix::identity(circle_ring(), 2));

  Projector f = universal_projector();
  Matrix g = Matrix::parse(f.ring(), {{"0", "1"}, {"-1", "0"}});
  Complement cf = complement_decomposition(f);
  EXPECT_TRUE(conjugate_by(f.matrix().transpose(), cf.complement.matrix(), g));
}

TEST(Rank, Examples) {
  Projector q = mobius_projector();
  EXPECT_EQ(rank_at_point(q, EvaluationPoint::rational(q.ring(), {{"x", "0"}, {"y", "1"}})), 1u);
  Projector id(Matrix::identity(q.ring(), 2));
  EXPECT_EQ(rank_at_point(id, EvaluationPoint::rational(q.ring(), {{"x", "3/5"}, {"y", "4/5"}})), 2u);
}

TEST(SplitSurjection, Examples) {
  Ring q = scalar_ring(CoeffDomain::rationals());
  Projector p(Matrix::parse(q, {{"1", "0"}, {"0", "0"}}));
  auto s = split_surjection(p, {q->one(), q->zero()}, std::vector<Element>{q->one(), q->zero()});
  EXPECT_EQ(s.status, SectionStatus::Established);

  Projector m = mobius_projector();
  const Ring& a = m.ring();
  SearchBudget budget;
  budget.degree = 2;
  budget.candidates = 300;
  auto t = split_surjection(m, {a->one(), a->zero()}, std::nullopt, budget);
  EXPECT_EQ(t.status, SectionStatus::NotEstablished);

  Projector one(Matrix::identity(a, 1));
  auto u = split_surjection(one, {a->constant(3)}, std::vector<Element>{a->constant(Scalar(1, 3))});
  EXPECT_EQ(u.status, SectionStatus::Established);
  EXPECT_THROW(split_surjection(one, {a->constant(3)}, std::vector<Element>{a->one()}), CertificateError);
}

TEST(Tensor, MobiusTimesDual) {
  Projector q = mobius_projector();
  Projector qt = dual_projector(q);
  EXPECT_EQ(qt.matrix(), q.matrix());
  Projector t = tensor_projector(q, qt);
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(t.matrix().trace(), q.ring()->one());
  EXPECT_EQ(rank_at_point(t, EvaluationPoint::rational(q.ring(), {{"x", "0"}, {"y", "1"}})), 1u);
  Projector id1(Matrix::identity(q.ring(), 1));
  EXPECT_EQ(tensor_projector(q, id1).matrix(), q.matrix());
}

TEST(Dual, Examples) {
  Projector f = universal_projector();
  Projector ft = dual_projector(f);
  EXPECT_TRUE((ft.matrix() * ft.matrix() - ft.matrix()).is_zero());
  EXPECT_EQ(rank_at_point(ft, EvaluationPoint::rational(f.ring(), {{"x", "1"}, {"y", "0"}, {"z", "5"}})), 1u);
  Projector zero(Matrix(f.ring(), 2, 2));
  EXPECT_TRUE(dual_projector(zero).matrix().is_zero());
}

TEST(PrincipalGenerator, FourSix) {
  Ring z = scalar_ring(CoeffDomain::integers());
  Element four = z->constant(4), six = z->constant(6);
  PrincipalGenerator g = principal_generator_in_ufd({four, six}, {{z->one(), z->one()}, {z->constant(-1), z->constant(2)}},
                                                    {four, six});
  EXPECT_EQ(normalize_associate(g.generator), z->constant(2));
  EXPECT_EQ(gcd_ufd(four, six), z->constant(2));
  EXPECT_EQ(g.quotients[0] * g.generator, four);
  EXPECT_EQ(g.quotients[1] * g.generator, six);
}

TEST(PrincipalGenerator, AlreadyPrincipal) {
  TowerSpec spec;
  spec.coeff = CoeffDomain::integers();
  spec.vars = {"y", "z"};
  Ring p = RingTower::create(spec);
  Element a = p->parse("y + z");
  PrincipalGenerator g = principal_generator_in_ufd({a}, {{p->one(), a}}, {a});
  EXPECT_EQ(normalize_associate(g.generator), normalize_associate(a));
}

TEST(Suites, UniversalAllPass) {
  Report r = universal_nonfreeness_suite();
  EXPECT_TRUE(all_pass(r)) << r.table();
  EXPECT_NE(r.find("gcd"), nullptr);
}

TEST(Suites, MobiusAllPass) {
  Report r = mobius_suite();
  EXPECT_TRUE(all_pass(r)) << r.table();
}

TEST(Suites, MobiusTamperedQ) {
  MobiusOptions o;
  o.q_override = Matrix::parse(circle_ring(), {{"(1 - x)/2", "y/2"}, {"y/2", "(1 - x)/2"}});
  Report r = mobius_suite(o);
  const Check* c = r.find("idempotent");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, Status::Fail);
  EXPECT_FALSE(c->witness.empty());
}

TEST(Suites, MobiusZeroBudget) {
  MobiusOptions o;
  o.degree_bound = 0;
  Report r = mobius_suite(o);
  const Check* c = r.find("non-principal");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, Status::Inconclusive);
}
