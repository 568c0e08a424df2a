// privnet: figure data, verification suites, scheme evaluation and shield planning.
//
// Exit codes: 0 success, 1 check failures or infeasible plan, 2 usage errors.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "privnet/commands.hpp"
#include "privnet/error.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_ids(const std::string& text) {
  std::vector<int> ids;
  for (const auto& item : privnet::split_list(text)) {
    try {
      std::size_t used = 0;
      const int id = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      ids.push_back(id);
    } catch (const std::logic_error&) {
      throw privnet::Error(privnet::ErrorCode::UnknownFigure, "bad figure id '" + item + "'");
    }
  }
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Private-state network toolkit"};
  app.require_subcommand(1);

  std::string ids_text = "4,5,6,7,8,9,10,11,12,13";
  std::string out_dir = ".";
  std::string config_path;
  auto* figures = app.add_subcommand("figures", "Write figure data as CSV");
  figures->add_option("--ids", ids_text, "Comma-separated figure ids in 4..13");
  figures->add_option("--out", out_dir, "Output directory");
  figures->add_option("--config", config_path, "Grid configuration JSON");

  std::uint64_t seed = 42;
  std::size_t trials = 50;
  std::string checks_text;
  auto* verify = app.add_subcommand("verify", "Run the numerical verification suites");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--trials", trials, "Trials per check");
  verify->add_option("--checks", checks_text, "Comma-separated subset of checks");

  std::string state_spec;
  int delta = 1;
  std::string mode_text = "two-way";
  auto* scheme = app.add_subcommand("scheme", "Evaluate a network scheme");
  scheme->add_option("--state", state_spec, "pbit-omega:<d_s>, private:<file> or params:<d_k,d_s,eps>")->required();
  scheme->add_option("--delta", delta, "Node degree");
  scheme->add_option("--mode", mode_text, "one-way or two-way");

  double target_gap = 0.0;
  int key_dim = 2;
  std::string family = "pbit-omega";
  auto* plan = app.add_subcommand("plan", "Smallest shield reaching a target gap");
  plan->add_option("--gap", target_gap, "Target gap eta - theta")->required();
  plan->add_option("--dk", key_dim, "Key dimension");
  plan->add_option("--family", family, "pbit-omega, lemma1+obs2 or lemma2+prop2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*figures) {
      std::cout << privnet::cmd_figures(parse_ids(ids_text), config_path, out_dir).dump(2) << '\n';
      return 0;
    }
    if (*verify) {
      const auto outcome = privnet::cmd_verify(seed, trials, privnet::split_list(checks_text));
      std::cout << outcome.report.dump(2) << '\n';
      std::cerr << outcome.table;
      return outcome.ok ? 0 : kExitFailure;
    }
    if (*scheme) {
      std::cout << privnet::cmd_scheme(state_spec, delta, privnet::parse_mode(mode_text)).dump(2) << '\n';
      return 0;
    }
    if (*plan) {
      std::cout << privnet::cmd_plan(target_gap, key_dim, family).dump(2) << '\n';
      return 0;
    }
  } catch (const privnet::Error& e) {
    std::cerr << "privnet: " << e.what() << '\n';
    if (e.code() != privnet::ErrorCode::Infeasible) return kExitUsage;
    const privnet::Json body{{"error", privnet::to_string(e.code())}, {"message", e.what()}};
    std::cout << body.dump(2) << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "privnet: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
