#include <gtest/gtest.h>

#include <cmath>

#include "privnet/error.hpp"
#include "privnet/measures.hpp"
#include "privnet/serialize.hpp"
#include "privnet/verify.hpp"

using namespace privnet;

namespace {

void expect_clean(const CheckReport& r, std::size_t trials) {
  EXPECT_EQ(r.trials, trials) << r.check_name;
  EXPECT_EQ(r.failures, 0u) << r.check_name;
  EXPECT_GE(r.worst_margin, -kCheckTol) << r.check_name;
  EXPECT_TRUE(r.details.empty()) << r.check_name;
}

}  // namespace

TEST(Verify, Obs1Seeds) {
  expect_clean(check_obs1(2, 2, 50, 1), 50);
  expect_clean(check_obs1(3, 3, 10, 4), 10);
}

TEST(Verify, Obs3Seeds) {
  expect_clean(check_obs3(3, 2, 50, 2), 50);
  expect_clean(check_obs3(2, 1, 5, 2), 5);
}

TEST(Verify, SuitesAtSpecSeeds) {
  expect_clean(check_obs4(50, 3), 50);
  expect_clean(check_lemma1(50, 5), 50);
  expect_clean(check_lemma2(30, 5), 30);
  expect_clean(check_cor2_cor3(50, 7), 50);
  expect_clean(check_gentle_measurement(200, 11), 200);
  expect_clean(check_fact1(20, 1), 20);
  expect_clean(check_squeeze_psd(30, 1), 30);
  expect_clean(check_pt_block_formula(10, 1), 10);
}

TEST(Verify, Lemma1TightOnSwapPbits) {
  for (std::size_t ds : {2u, 3u, 4u, 5u}) {
    const double eps = attacked_distance(swap_pbit(ds)).global;
    EXPECT_LE(std::abs(ds * eps - 1.0), 1e-8) << ds;
  }
}

TEST(Verify, Deterministic) {
  const auto a = verify_report_to_json(run_all(42, 3)).dump();
  const auto b = verify_report_to_json(run_all(42, 3)).dump();
  EXPECT_EQ(a, b);
  const auto c = verify_report_to_json(run_all(43, 3)).dump();
  EXPECT_NE(a, c);
}

TEST(Verify, SubsetMatchesFullRun) {
  const auto full = run_all(42, 3);
  const auto one = run_all(42, 3, {"gentle_measurement"});
  ASSERT_EQ(one.reports.size(), 1u);
  for (const auto& r : full.reports) {
    if (r.check_name != "gentle_measurement") continue;
    EXPECT_EQ(check_report_to_json(r).dump(), check_report_to_json(one.reports[0]).dump());
  }
}

TEST(Verify, ZeroTrials) {
  const auto r = run_all(42, 0);
  EXPECT_TRUE(r.reports.empty());
  EXPECT_TRUE(r.ok());
}

TEST(Verify, UnknownCheck) {
  try {
    run_all(42, 1, {"obs9"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadSpec);
  }
}

TEST(Verify, CheckNamesOrder) {
  const auto& names = check_names();
  ASSERT_EQ(names.size(), 10u);
  EXPECT_EQ(names.front(), "obs1");
  EXPECT_EQ(names.back(), "pt_block_formula");
  const auto r = run_all(1, 1);
  ASSERT_EQ(r.reports.size(), names.size());
  for (std::size_t k = 0; k < names.size(); ++k) EXPECT_EQ(r.reports[k].check_name, names[k]);
}

TEST(Verify, PptBoundaryBisection) {
  for (std::size_t ds : {2u, 3u}) {
    const auto gamma = swap_pbit(ds);
    const std::size_t n = gamma.matrix().dim();
    const CMatrix noise = CMatrix::identity(n) * Complex(1.0 / static_cast<double>(n));
    const auto b = ppt_boundary_mix(gamma, noise);
    EXPECT_LE(b.iterations, kBisectionMaxIterations);
    EXPECT_TRUE(b.upper_ppt);
    EXPECT_FALSE(b.lower_ppt);
    EXPECT_TRUE(is_ppt(b.state));
    EXPECT_GT(b.weight, 0.0);
    EXPECT_LT(b.weight, 1.0);
  }
}

TEST(Verify, PptSamplesArePpt) {
  const auto gamma = swap_pbit(2);
  Rng rng(99);
  for (std::size_t kind = 0; kind < 9; ++kind) {
    const auto s = sample_ppt_near(gamma, kind, rng);
    EXPECT_TRUE(is_ppt(s.rho, 1e-10)) << s.origin;
    EXPECT_FALSE(s.origin.empty());
  }
}

TEST(Verify, SwapPbitIsNotPpt) { EXPECT_FALSE(is_ppt(swap_pbit(2))); }
