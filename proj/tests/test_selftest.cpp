#include "faulhaber/selftest.hpp"

#include <gtest/gtest.h>

using namespace faulhaber;

TEST(SelfTest, FullSuitePasses) {
  const auto report = run_selftest();
  for (const auto& g : report.groups) EXPECT_TRUE(g.passed) << g.name << ": " << g.detail;
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.groups.size(), 22U);
}

TEST(SelfTest, QuickSuitePasses) {
  SelfTestOptions options;
  options.quick = true;
  EXPECT_TRUE(run_selftest(options).all_passed());
}

TEST(SelfTest, InjectedEgfFaultFailsRouteEquivalenceOnly) {
  SelfTestOptions options;
  options.quick = true;
  options.fault = InjectedFault::EgfRoute;
  const auto report = run_selftest(options);
  EXPECT_FALSE(report.all_passed());
  for (const auto& g : report.groups) {
    EXPECT_EQ(g.passed, g.name != "bernoulli.route-equivalence") << g.name;
  }
}

TEST(SelfTest, InjectedResidueFaultIsCaught) {
  SelfTestOptions options;
  options.quick = true;
  options.fault = InjectedFault::ResiduePrediction;
  const auto report = run_selftest(options);
  for (const auto& g : report.groups) {
    if (g.name == "integrality.residue-prediction") EXPECT_FALSE(g.passed);
  }
}
