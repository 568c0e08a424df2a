#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "privnet/error.hpp"
#include "privnet/scheme.hpp"

using namespace privnet;

namespace {

Scheme make(double log_dim_h, int delta, double eta, double theta = 0.0) {
  Scheme s;
  s.state = "test";
  s.log_dim_h = log_dim_h;
  s.delta = delta;
  s.eta = eta;
  s.theta = theta;
  return s;
}

}  // namespace

TEST(Scheme, Memory) {
  EXPECT_EQ(memory(make(4, 1, 0)), 4.0);
  const Scheme omega3 = build_scheme_from_pbit(3, 10, Mode::TwoWay);
  EXPECT_NEAR(memory(omega3), 10.0 * std::log2(6.0), 1e-12);
  EXPECT_NEAR(memory(omega3), 25.85, 5e-3);
  EXPECT_EQ(memory(make(3, 7, 1)), 7.0 * memory(make(3, 1, 1)));
}

TEST(Scheme, Density) {
  EXPECT_EQ(density(make(3, 1, 3)), 1.0);
  EXPECT_EQ(density(build_scheme_from_pbit(2, 1, Mode::TwoWay)), 0.5);
  EXPECT_EQ(density(make(3, 1, 0)), 0.0);
  EXPECT_THROW(density(make(0.5, 1, 0)), Error);
}

TEST(Scheme, Overhead) {
  EXPECT_EQ(overhead(make(3, 4, 3)), 0.0);
  EXPECT_EQ(overhead(build_scheme_from_pbit(2, 1, Mode::TwoWay)), 1.0);
  EXPECT_EQ(overhead(make(3, 4, 0)), memory(make(3, 4, 0)));
}

TEST(Scheme, OverheadIdentity) {
  // V = M (1 - density).
  for (int ds : {2, 3, 7, 16}) {
    for (int delta : {1, 3, 10}) {
      const Scheme s = build_scheme_from_pbit(ds, delta, Mode::TwoWay);
      EXPECT_NEAR(overhead(s), memory(s) * (1.0 - density(s)), 1e-12);
    }
  }
}

TEST(Scheme, GapAndGoodness) {
  const Scheme omega3 = build_scheme_from_pbit(3, 1, Mode::TwoWay);
  EXPECT_NEAR(omega3.theta, 2.0 / (3.0 * std::numbers::ln2), 1e-12);
  EXPECT_NEAR(gap(omega3), 1.0 - 2.0 / (3.0 * std::numbers::ln2), 1e-12);
  EXPECT_NEAR(gap(omega3), 0.0382, 1e-4);
  EXPECT_TRUE(is_good(omega3));

  const Scheme omega2 = build_scheme_from_pbit(2, 1, Mode::TwoWay);
  EXPECT_NEAR(omega2.theta, 1.0 / std::numbers::ln2, 1e-12);
  EXPECT_FALSE(is_good(omega2));
  EXPECT_LT(gap(omega2), 0.0);

  EXPECT_FALSE(is_good(make(2, 1, 1, 1)));
}

TEST(Scheme, GoodFromThreeOnward) {
  for (int ds = 2; ds <= 64; ++ds) {
    EXPECT_EQ(is_good(build_scheme_from_pbit(ds, 1, Mode::TwoWay)), ds >= 3) << ds;
  }
  EXPECT_NEAR(gap(build_scheme_from_pbit(16, 1, Mode::TwoWay)), 1.0 - 2.0 / std::numbers::ln2 / 16.0, 1e-12);
  EXPECT_NEAR(gap(build_scheme_from_pbit(16, 1, Mode::TwoWay)), 0.8197, 1e-4);
}

TEST(Scheme, HomomorphicExtend) {
  const Scheme omega2 = build_scheme_from_pbit(2, 1, Mode::TwoWay);
  const auto same = homomorphic_extend(omega2, 1);
  EXPECT_EQ(same.memory, memory(omega2));
  EXPECT_EQ(same.overhead_increase, 0.0);
  EXPECT_FALSE(same.degree_mismatch);

  const auto r = homomorphic_extend(omega2, 3);
  EXPECT_EQ(r.memory, 6.0);
  EXPECT_EQ(r.overhead, 5.0);
  EXPECT_NEAR(r.density, density(omega2) / 3.0, 1e-15);
  EXPECT_EQ(r.extended.eta, omega2.eta);
  EXPECT_EQ(r.extended.theta, omega2.theta);
  EXPECT_FALSE(r.degree_mismatch);

  EXPECT_THROW(homomorphic_extend(omega2, 0), Error);
}

TEST(Scheme, HomomorphicExtendCountsDegree) {
  const auto r = homomorphic_extend(build_scheme_from_pbit(2, 4, Mode::TwoWay), 3);
  EXPECT_EQ(r.overhead_increase, 4.0 * 2.0 * 2.0);
  EXPECT_EQ(r.per_link_increase, 2.0 * 2.0);
  EXPECT_TRUE(r.degree_mismatch);
}

TEST(Scheme, Validation) {
  EXPECT_THROW(validate(make(2, 0, 1)), Error);
  EXPECT_THROW(validate(make(0.5, 1, 0)), Error);
  EXPECT_THROW(validate(make(2, 1, 3)), Error);
  EXPECT_THROW(validate(make(2, 1, -0.1)), Error);
  EXPECT_NO_THROW(validate(make(2, 1, 2)));
  EXPECT_THROW(build_scheme_from_pbit(1, 1, Mode::TwoWay), Error);
}

TEST(Scheme, Modes) {
  EXPECT_EQ(parse_mode("one-way"), Mode::OneWay);
  EXPECT_EQ(parse_mode("two-way"), Mode::TwoWay);
  EXPECT_STREQ(to_string(Mode::OneWay), "one-way");
  try {
    parse_mode("both");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadSpec);
  }
}
