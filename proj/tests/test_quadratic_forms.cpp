#include <gtest/gtest.h>

#include <set>

#include "picard/errors.hpp"
#include "picard/projective.hpp"
#include "picard/quadratic_forms.hpp"

using namespace picard;

namespace {

Ring q() { return scalar_ring(CoeffDomain::rationals()); }
Ring z() { return scalar_ring(CoeffDomain::integers()); }

}  // namespace

TEST(ModuleFromForm, SumOfSquares) {
  QFModule m = module_from_form(BinaryQuadraticForm::parse(q(), "1", "0", "1"));
  EXPECT_EQ(m.form.discriminant(), q()->constant(-1));
  EXPECT_EQ(m.f, Matrix::parse(q(), {{"0", "-1"}, {"1", "0"}}));
  EXPECT_EQ(m.f * m.f, Matrix::identity(q(), 2) * Scalar(-1));
}

TEST(ModuleFromForm, HalfXY) {
  QFModule m = module_from_form(BinaryQuadraticForm::parse(q(), "0", "1/2", "0"));
  EXPECT_EQ(m.form.discriminant(), q()->constant(Scalar(1, 4)));
  EXPECT_EQ(m.f * m.f, Matrix::identity(q(), 2) * Scalar(1, 4));
}

TEST(ModuleFromForm, ZeroForm) {
  QFModule m = module_from_form(BinaryQuadraticForm::parse(q(), "0", "0", "0"));
  EXPECT_TRUE(m.form.discriminant().is_zero());
  EXPECT_TRUE(m.f.is_zero());
}

TEST(EvaluateForm, Examples) {
  auto f = BinaryQuadraticForm::parse(q(), "1", "0", "1");
  EXPECT_EQ(evaluate_form_det(f, q()->constant(3), q()->constant(4)), q()->constant(25));
  auto g = BinaryQuadraticForm::parse(z(), "2", "1", "3");
  EXPECT_TRUE(evaluate_form_det(g, z()->zero(), z()->zero()).is_zero());
}

TEST(BasisTest, Examples) {
  QFModule m = module_from_form(BinaryQuadraticForm::parse(q(), "1", "0", "1"));
  EXPECT_TRUE(basis_test(m, q()->one(), q()->zero()).basis);
  QFModule m2 = module_from_form(BinaryQuadraticForm::parse(z(), "2", "0", "2"));
  EXPECT_FALSE(basis_test(m2, z()->one(), z()->zero()).basis);
  QFModule m3 = module_from_form(BinaryQuadraticForm::parse(z(), "1", "0", "1"));
  BasisTest t = basis_test(m3, z()->constant(3), z()->constant(4));
  EXPECT_FALSE(t.basis);
  EXPECT_EQ(t.value, z()->constant(25));
}

TEST(PrimitiveCharts, Examples) {
  PrimitiveCharts g = properly_primitive_local_bases(BinaryQuadraticForm::parse(z(), "1", "0", "1"));
  EXPECT_TRUE(g.global);
  PrimitiveCharts three = properly_primitive_local_bases(BinaryQuadraticForm::parse(z(), "2", "1", "3"));
  EXPECT_FALSE(three.global);
  EXPECT_EQ(three.charts.size(), 3u);
  EXPECT_TRUE(verify_bezout(three.form_certificate));
  EXPECT_TRUE(verify_bezout(three.cover));
  for (const auto& c : three.charts) EXPECT_EQ(c.change * c.adjugate, Matrix::identity(z(), 2) * c.value);
  EXPECT_THROW(properly_primitive_local_bases(BinaryQuadraticForm::parse(z(), "2", "2", "2")), CertificateError);
}

TEST(Nu, RoundTrip) {
  for (auto abc : {std::array<const char*, 3>{"1", "0", "1"}, std::array<const char*, 3>{"1", "0", "-2"},
                   std::array<const char*, 3>{"2", "1", "3"}}) {
    auto f = BinaryQuadraticForm::parse(z(), abc[0], abc[1], abc[2]);
    EXPECT_EQ(nu_from_basis(module_from_form(f).f), f) << f.to_string();
  }
  auto i = nu_from_basis(Matrix::parse(q(), {{"0", "-1"}, {"1", "0"}}));
  EXPECT_EQ(i, BinaryQuadraticForm::parse(q(), "1", "0", "1"));
  auto zero = nu_from_basis(Matrix(q(), 2, 2));
  EXPECT_TRUE(zero.a.is_zero() && zero.b.is_zero() && zero.c.is_zero());
}

TEST(Pell, SmallBoxes) {
  auto strings = [](const std::vector<Element>& v) {
    std::set<std::string> s;
    for (const auto& e : v) s.insert(e.to_string());
    return s;
  };
  Ring r2 = pell_ring(2);
  std::set<std::string> want2;
  for (const char* e : {"1", "-1", "3 + 2*T", "3 - 2*T", "-3 + 2*T", "-3 - 2*T"}) want2.insert(r2->parse(e).to_string());
  EXPECT_EQ(strings(pell_units(2, 5)), want2);
  Ring rm = pell_ring(-1);
  std::set<std::string> want1;
  for (const char* e : {"1", "-1", "T", "-T"}) want1.insert(rm->parse(e).to_string());
  EXPECT_EQ(strings(pell_units(-1, 2)), want1);
  EXPECT_EQ(pell_units(7, 0).size(), 2u);
}

TEST(Automorphism, Examples) {
  QFModule m = module_from_form(BinaryQuadraticForm::parse(q(), "1", "0", "1"));
  Element w = automorphism_to_scalar(m, m.f);
  EXPECT_EQ(w, m.sqrt_d());
  EXPECT_EQ(automorphism_to_scalar(m, Matrix::identity(q(), 2)), m.algebra->one());

  QFModule p = module_from_form(BinaryQuadraticForm::parse(z(), "1", "0", "-2"));
  Element u = automorphism_to_scalar(p, Matrix::parse(z(), {{"3", "4"}, {"2", "3"}}));
  EXPECT_EQ(u, p.element(z()->constant(3), z()->constant(2)));

  EXPECT_THROW(automorphism_to_scalar(m, Matrix::parse(q(), {{"1", "1"}, {"0", "1"}})), Error);
  EXPECT_THROW(automorphism_to_scalar(m, Matrix::parse(q(), {{"2", "0"}, {"0", "1"}})), Error);
}

TEST(QForm, SuitePasses) {
  QFormSuiteOptions o;
  o.form = BinaryQuadraticForm::parse(z(), "1", "0", "1");
  Report r = qform_suite(o);
  for (const auto& c : r.checks()) EXPECT_EQ(c.status, Status::Pass) << c.id << " " << c.witness.dump();
  EXPECT_NE(r.find("pell"), nullptr);
  EXPECT_NE(r.find("nu-round-trip"), nullptr);
}
