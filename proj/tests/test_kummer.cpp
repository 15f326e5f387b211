#include <gtest/gtest.h>

#include "picard/arith.hpp"
#include "picard/errors.hpp"
#include "picard/kummer.hpp"
#include "picard/projective.hpp"

using namespace picard;

namespace {

Ring fp(long p) { return scalar_ring(CoeffDomain::prime_field(p)); }

Ring gaussian() {
  TowerSpec spec;
  spec.base_generator = {"i", "i^2 + 1"};
  return RingTower::create(spec);
}

}  // namespace

TEST(PN, F5) {
  Ring f5 = fp(5);
  RootData rd = check_PN(f5, f5->constant(2), 4);
  EXPECT_EQ(rd.powers, (std::vector<Element>{f5->constant(1), f5->constant(2), f5->constant(4), f5->constant(3)}));
  for (std::size_t k = 1; k < 4; ++k) EXPECT_EQ((f5->one() - rd.powers[k]) * rd.one_minus_inverse[k], f5->one());
  EXPECT_EQ(rd.n_inverse, f5->constant(4));
}

TEST(PN, Gaussian) {
  Ring qi = gaussian();
  RootData rd = check_PN(qi, qi->sym("i"), 4);
  EXPECT_EQ(rd.one_minus_inverse[1], qi->parse("(1 + i)/2"));
  EXPECT_EQ(rd.one_minus_inverse[2], qi->constant(Scalar(1, 2)));
}

TEST(PN, Failures) {
  Ring z = scalar_ring(CoeffDomain::integers());
  try {
    check_PN(z, z->constant(-1), 2);
    FAIL() << "expected a failure";
  } catch (const CertificateError& e) {
    EXPECT_NE(std::string(e.what()).find("unit"), std::string::npos);
  }
  Ring f5 = fp(5);
  EXPECT_THROW(check_PN(f5, f5->constant(4), 4), CertificateError);  // order 2
  EXPECT_THROW(check_PN(f5, f5->constant(3), 2), CertificateError);  // 3^2 != 1
  // F_5 has no element of order 5, and 5 = 0 is not invertible anyway.
  Ring f7 = fp(7);
  EXPECT_NO_THROW(check_PN(f7, f7->constant(3), 6));
}

TEST(Characters, Examples) {
  Ring qi = gaussian();
  RootData gi = check_PN(qi, qi->sym("i"), 4);
  CharacterGroup c2 = character_group({2}, gi);
  EXPECT_EQ(c2.size(), 2u);
  EXPECT_EQ(gi.power(c2.values[1][1]), qi->constant(-1));

  Ring f5 = fp(5);
  RootData f = check_PN(f5, f5->constant(2), 4);
  CharacterGroup c4 = character_group({4}, f);
  ASSERT_EQ(c4.size(), 4u);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t k = 0; k < 4; ++k) {
      long expect = 1;
      for (std::size_t m = 0; m < j * k; ++m) expect = expect * 2 % 5;
      EXPECT_EQ(f.power(c4.values[j][k]), f5->constant(expect));
    }

  Ring q = scalar_ring(CoeffDomain::rationals());
  RootData s = check_PN(q, q->constant(-1), 2);
  CharacterGroup c22 = character_group({2, 2}, s);
  EXPECT_EQ(c22.size(), 4u);
  EXPECT_THROW(character_group({4}, s), PreconditionError);
}

TEST(Vandermonde, Examples) {
  Ring f5 = fp(5);
  RootData f = check_PN(f5, f5->constant(2), 4);
  VandermondeIso v = vandermonde_iso(f, 4);
  EXPECT_FALSE(v.det.is_zero());
  EXPECT_EQ(v.matrix * v.inverse, Matrix::identity(f5, 4));
  VandermondeIso one = vandermonde_iso(f, 1);
  EXPECT_EQ(one.det, f5->one());

  Ring qi = gaussian();
  RootData gi = check_PN(qi, qi->sym("i"), 4);
  VandermondeIso v2 = vandermonde_iso(gi, 2);
  EXPECT_EQ(v2.matrix, Matrix::parse(qi, {{"1", "1"}, {"1", "-1"}}));
  EXPECT_EQ(v2.det, qi->constant(-2));
  EXPECT_THROW(vandermonde_iso(gi, 3), PreconditionError);
}

TEST(Vandermonde, Sweep) {
  for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L})
    for (long n = 1; n <= 12; ++n) {
      if ((p - 1) % n) continue;
      Ring r = fp(p);
      long zeta = 0;
      for (long c = 1; c < p && !zeta; ++c) {
        long e = 1, acc = c;
        while (acc != 1) acc = acc * c % p, ++e;
        if (e == n) zeta = c;
      }
      RootData rd = check_PN(r, r->constant(zeta), static_cast<std::size_t>(n));
      EXPECT_TRUE(is_unit(vandermonde_iso(rd, static_cast<std::size_t>(n)).det)) << p << " " << n;
    }
}

TEST(Vandermonde, CharacterMatrixKronecker) {
  Ring f13 = fp(13);
  RootData rd = check_PN(f13, f13->constant(5), 4);
  CharacterGroup cg = character_group({2, 4}, rd);
  VandermondeIso m = character_matrix(cg, rd);
  EXPECT_EQ(m.matrix.rows(), 8u);
  EXPECT_TRUE(is_unit(m.det));
}

TEST(Decomposition, F5) {
  KummerAlgebra k = f5_kummer();
  const auto& dec = k.decomposition;
  EXPECT_TRUE(k.cover.galois());
  ASSERT_EQ(dec.components.size(), 4u);
  EXPECT_EQ(dec.generator_count(), 4u);
  EXPECT_TRUE(dec.isomorphism());
  EXPECT_TRUE(dec.grading);
  ASSERT_TRUE(dec.det);
  EXPECT_TRUE(is_unit(*dec.det));
  EXPECT_TRUE(k.monomial_components);
  // g(x^j) = 2^j x^j
  const Ring& b = k.action.ring();
  for (unsigned j = 0; j < 4; ++j) {
    Element xj = b->sym("x").pow(j);
    EXPECT_EQ(k.action.apply(1, xj), xj * Scalar(1L << j));
  }
}

TEST(Decomposition, MobiusComplexification) {
  GroupAction act = complex_circle_action();
  RootData rd = check_PN(act.base(), act.base()->constant(-1), 2);
  KummerDecomposition dec = kummer_decomposition(act, rd);
  ASSERT_EQ(dec.components.size(), 2u);
  EXPECT_EQ(dec.components[0].basis, std::vector<Element>{act.ring()->one()});
  EXPECT_EQ(dec.components[1].basis, std::vector<Element>{act.ring()->sym("i")});
  EXPECT_TRUE(dec.isomorphism());
  EXPECT_TRUE(dec.grading);
}

TEST(Decomposition, TrivialGroup) {
  Ring f5 = fp(5);
  RootData rd = check_PN(f5, f5->constant(2), 4);
  KummerAlgebra k = kummer_algebra_free(rd, f5->constant(3), 1);
  EXPECT_EQ(k.action.rank(), 1u);
  ASSERT_EQ(k.decomposition.components.size(), 1u);
  EXPECT_TRUE(k.decomposition.isomorphism());
}

TEST(KummerAlgebra, GaussianSquareRootOfTwo) {
  Ring qi = gaussian();
  RootData rd = check_PN(qi, qi->sym("i"), 4);
  KummerAlgebra k = kummer_algebra_free(rd, qi->constant(2), 2);
  const Ring& b = k.action.ring();
  EXPECT_EQ(k.action.apply(1, b->sym("x")), -b->sym("x"));
  EXPECT_TRUE(k.cover.galois());
  EXPECT_TRUE(k.monomial_components);
  EXPECT_EQ(k.decomposition.components[1].basis, std::vector<Element>{b->sym("x")});
}

TEST(KummerAlgebra, Preconditions) {
  Ring f5 = fp(5);
  RootData rd = check_PN(f5, f5->constant(2), 4);
  EXPECT_THROW(kummer_algebra_free(rd, f5->zero(), 2), PreconditionError);
  EXPECT_THROW(kummer_algebra_free(rd, f5->constant(2), 3), PreconditionError);
}

TEST(Kummer, SuitePasses) {
  Report r = kummer_suite();
  for (const auto& c : r.checks()) EXPECT_EQ(c.status, Status::Pass) << c.id << " " << c.witness.dump();
}
