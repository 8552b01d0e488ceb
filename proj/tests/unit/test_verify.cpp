#include <gtest/gtest.h>

#include <algorithm>

#include "hilfer/verify.hpp"

using namespace hilfer;

TEST(Verify, FullSuitePasses) {
  const VerifyReport r = run_verification();
  for (const auto& c : r.results) EXPECT_TRUE(c.passed) << c.group << ": " << c.name << " err=" << c.max_error;
  std::vector<std::string> seen;
  for (const auto& c : r.results) seen.push_back(c.group);
  for (const auto& g : verify_groups()) EXPECT_NE(std::find(seen.begin(), seen.end(), g), seen.end()) << g;
}

TEST(Verify, KernelMutationBreaksCompositionChecks) {
  VerifyOptions opts;
  opts.only = {"composition", "left_inverse"};
  opts.mutate_kernel = true;
  const VerifyReport r = run_verification(opts);
  EXPECT_FALSE(r.all_passed());
  for (const auto& c : r.results)
    if (c.name.find("RL difference") == std::string::npos) EXPECT_FALSE(c.passed) << c.name;
}

TEST(Verify, SubsetAndToleranceOverride) {
  VerifyOptions opts;
  opts.only = {"laplace"};
  opts.ys = {2.0};
  opts.tol = 1e-8;
  const VerifyReport r = run_verification(opts);
  EXPECT_TRUE(r.all_passed());
  for (const auto& c : r.results) {
    EXPECT_EQ(c.group, "laplace");
    EXPECT_EQ(c.tolerance, 1e-8);
  }
}

TEST(Verify, RejectsBadOptions) {
  VerifyOptions opts;
  opts.only = {"nope"};
  EXPECT_THROW((void)run_verification(opts), std::invalid_argument);
  VerifyOptions y;
  y.ys = {0.1};
  EXPECT_THROW((void)run_verification(y), std::invalid_argument);
}
