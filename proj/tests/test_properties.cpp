#include <gtest/gtest.h>

#include "property_suite.hpp"

using namespace picard;

TEST(Properties, AllHold) {
  Report r = props::property_suite(7, 200);
  ASSERT_GE(r.checks().size(), 5u);
  for (const auto& c : r.checks()) EXPECT_EQ(c.status, Status::Pass) << c.id << " " << c.witness.dump();
}

TEST(Properties, OtherSeed) {
  Report r = props::property_suite(2024, 60);
  for (const auto& c : r.checks()) EXPECT_EQ(c.status, Status::Pass) << c.id << " " << c.witness.dump();
}

TEST(Reports, DuplicateIdRejected) {
  Report r("x");
  r.check("a", "a", true);
  EXPECT_THROW(r.check("a", "a", true), std::exception);
}
