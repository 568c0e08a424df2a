#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <limits>

#include "privnet/error.hpp"
#include "privnet/serialize.hpp"

using namespace privnet;

namespace {

ErrorCode code_of_parse(const Json& j) {
  try {
    state_from_json(j);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Infeasible;
}

}  // namespace

TEST(Serialize, StateRoundTrip) {
  const auto gamma = random_private_state(2, 3, 4);
  const auto back = state_from_json(state_to_json(gamma));
  EXPECT_EQ(back.key_dim(), 2u);
  EXPECT_EQ(back.shield_dim(), 3u);
  EXPECT_EQ(max_abs_diff(back.matrix(), gamma.matrix()), 0.0);
  EXPECT_EQ(back.flags().private_by_construction, gamma.flags().private_by_construction);
  EXPECT_EQ(state_to_json(back).dump(), state_to_json(gamma).dump());
}

TEST(Serialize, StateFile) {
  const auto path = (std::filesystem::temp_directory_path() / "privnet_state_roundtrip.json").string();
  const auto omega = swap_pbit(2);
  save_state(omega, path);
  const auto back = load_state(path);
  EXPECT_EQ(max_abs_diff(back.matrix(), omega.matrix()), 0.0);
  EXPECT_TRUE(back.flags().private_by_construction);
  std::filesystem::remove(path);
}

TEST(Serialize, MissingFlagsDefaultToFalse) {
  Json j = state_to_json(swap_pbit(2));
  j.erase("flags");
  EXPECT_FALSE(state_from_json(j).flags().private_by_construction);
}

TEST(Serialize, StateErrors) {
  Json j = state_to_json(max_entangled(2));
  Json missing = j;
  missing.erase("matrix");
  EXPECT_EQ(code_of_parse(missing), ErrorCode::BadSpec);

  Json short_matrix = j;
  short_matrix["matrix"].erase(short_matrix["matrix"].size() - 1);
  EXPECT_EQ(code_of_parse(short_matrix), ErrorCode::StructureMismatch);

  Json bad_entry = j;
  bad_entry["matrix"][0] = Json::array({1.0});
  EXPECT_EQ(code_of_parse(bad_entry), ErrorCode::BadSpec);

  Json not_density = j;
  not_density["matrix"][0] = Json::array({5.0, 0.0});
  EXPECT_EQ(code_of_parse(not_density), ErrorCode::NotDensity);

  EXPECT_THROW(load_state("/nonexistent/privnet/state.json"), Error);
}

TEST(Serialize, NonFiniteNumbers) {
  EXPECT_EQ(number(std::nan("")), Json("nan"));
  EXPECT_EQ(number(std::numeric_limits<double>::infinity()), Json("inf"));
  EXPECT_EQ(number(-std::numeric_limits<double>::infinity()), Json("-inf"));
  EXPECT_EQ(number(0.5), Json(0.5));
}

TEST(Serialize, SchemeFieldOrder) {
  const auto j = scheme_to_json(build_scheme_from_pbit(3, 2, Mode::OneWay));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  const std::vector<std::string> expected{"state", "log_dim_H", "delta", "eta", "eta_provenance",
                                          "theta", "theta_provenance", "mode"};
  EXPECT_EQ(keys, expected);
  EXPECT_EQ(j["mode"], "one-way");
  EXPECT_EQ(j["delta"], 2);
}

TEST(Serialize, BoundAndReport) {
  const auto b = bound_to_json(thm4_eta(1.5));
  EXPECT_EQ(b["value"], "nan");
  EXPECT_EQ(b["domain_ok"], false);

  CheckReport r;
  r.check_name = "x";
  r.trials = 3;
  r.failures = 1;
  r.worst_margin = -0.5;
  r.details.push_back({2, "lhs > rhs", -0.5});
  const auto j = check_report_to_json(r);
  EXPECT_EQ(j["details"][0]["trial"], 2);
  EXPECT_EQ(j["failures"], 1);
  VerifyReport v;
  v.reports.push_back(r);
  EXPECT_TRUE(verify_report_to_json(v).is_array());
}
