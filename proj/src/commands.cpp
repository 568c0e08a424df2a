#include "privnet/commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "privnet/bounds.hpp"
#include "privnet/error.hpp"
#include "privnet/measures.hpp"
#include "privnet/plan.hpp"
#include "privnet/verify.hpp"

namespace privnet {

namespace {

template <typename T>
T parse_number(const std::string& text, const std::string& what) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto r = std::from_chars(text.data(), end, value);
  if (r.ec != std::errc() || r.ptr != end) throw Error(ErrorCode::BadSpec, "bad " + what + " '" + text + "'");
  return value;
}

Scheme scheme_from_private_file(const std::string& path, int delta, Mode mode) {
  const auto state = load_state(path);
  if (!state.flags().private_by_construction) {
    throw Error(ErrorCode::BadSpec, "state file '" + path + "' is not flagged as a private state");
  }
  const double eps = attacked_distance(state).global;
  const double dk = static_cast<double>(state.key_dim());
  const double ds = static_cast<double>(state.shield_dim());
  Scheme s;
  s.state = "private:" + path;
  s.log_dim_h = std::log2(dk * ds);
  s.delta = delta;
  s.eta = std::log2(dk);
  s.eta_provenance = "private state: distillable key at least log2 d_k";
  s.theta = obs2_repeater_bound(eps).value;
  s.theta_provenance = "2 log2(1 + eps) with measured attacked distance eps";
  s.mode = mode;
  return s;
}

Scheme scheme_from_params(const std::string& args, int delta, Mode mode) {
  const auto parts = split_list(args);
  if (parts.size() != 3) throw Error(ErrorCode::BadSpec, "params needs d_k,d_s,eps");
  const int dk = parse_number<int>(parts[0], "d_k");
  const int ds = parse_number<int>(parts[1], "d_s");
  const double eps = parse_number<double>(parts[2], "eps");
  if (dk < 2 || ds < 1) throw Error(ErrorCode::BadSpec, "params needs d_k >= 2 and d_s >= 1");
  const auto eta = thm5_eta(dk, eps);
  const auto theta = prop2_repeater_bound(eps, dk, ds);
  if (!eta.domain_ok || !theta.domain_ok) {
    throw Error(ErrorCode::BadSpec, "params outside the bound domain: " +
                                        (eta.domain_ok ? theta.domain_note : eta.domain_note));
  }
  Scheme s;
  s.state = "params:" + args;
  s.log_dim_h = std::log2(static_cast<double>(dk) * ds);
  s.delta = delta;
  s.eta = eta.value;
  s.eta_provenance = eta.formula;
  s.theta = theta.value;
  s.theta_provenance = theta.formula;
  s.mode = mode;
  return s;
}

Json plan_to_json(const ShieldPlan& p) {
  Json j;
  j["family"] = p.family;
  j["feasible"] = true;
  j["d_k"] = p.key_dim;
  j["target_gap"] = p.target_gap;
  j["d_s"] = p.shield_dim;
  j["shield_qubits"] = p.shield_qubits;
  j["eps"] = number(p.eps);
  j["eta"] = number(p.eta);
  j["eta_provenance"] = p.eta_provenance;
  j["theta"] = number(p.theta);
  j["theta_provenance"] = p.theta_provenance;
  j["gap"] = number(p.gap);
  j["overhead_per_memory"] = number(p.overhead_per_memory);
  return j;
}

std::string format_table(const VerifyReport& r) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-20s %7s %9s %9s %14s\n", "check", "trials", "failures", "excluded",
                "worst_margin");
  out << line;
  for (const auto& c : r.reports) {
    std::snprintf(line, sizeof line, "%-20s %7zu %9zu %9zu %14.6e\n", c.check_name.c_str(), c.trials, c.failures,
                  c.excluded, c.worst_margin);
    out << line;
  }
  out << (r.ok() ? "all checks passed\n" : "FAILED: " + std::to_string(r.total_failures) + " failing trials\n");
  return out.str();
}

}  // namespace

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Json cmd_figures(const std::vector<int>& ids, const std::string& config_path, const std::string& out_dir) {
  const GridConfig config = config_path.empty() ? GridConfig{} : GridConfig::load(config_path);
  Json j = Json::array();
  for (const auto& path : write_figures(ids, config, out_dir)) j.push_back(path);
  return j;
}

VerifyOutcome cmd_verify(std::uint64_t seed, std::size_t trials, const std::vector<std::string>& checks) {
  const auto report = run_all(seed, trials, checks);
  return {verify_report_to_json(report), format_table(report), report.ok()};
}

Scheme scheme_from_spec(const std::string& spec, int delta, Mode mode) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::BadSpec, "state spec needs a kind prefix: '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  Scheme s;
  if (kind == "pbit-omega") {
    const int ds = parse_number<int>(rest, "d_s");
    if (ds < 2) throw Error(ErrorCode::BadSpec, "pbit-omega needs d_s >= 2");
    s = build_scheme_from_pbit(ds, delta, mode);
  } else if (kind == "private") {
    s = scheme_from_private_file(rest, delta, mode);
  } else if (kind == "params") {
    s = scheme_from_params(rest, delta, mode);
  } else {
    throw Error(ErrorCode::BadSpec, "unknown state kind '" + kind + "'");
  }
  validate(s);
  return s;
}

Json cmd_scheme(const std::string& spec, int delta, Mode mode) {
  if (delta < 1) throw Error(ErrorCode::BadSpec, "delta must be >= 1");
  const Scheme s = scheme_from_spec(spec, delta, mode);
  Json j;
  j["scheme"] = scheme_to_json(s);
  j["M"] = number(memory(s));
  j["D"] = number(density(s));
  j["V"] = number(overhead(s));
  j["eta"] = number(s.eta);
  j["theta"] = number(s.theta);
  j["gap"] = number(gap(s));
  j["is_good"] = is_good(s);
  return j;
}

Json cmd_plan(double target_gap, int key_dim, const std::string& family) {
  const ShieldPlan chosen = plan_shield(target_gap, key_dim, family);
  Json side = Json::array();
  for (const auto& f : plan_families()) {
    try {
      side.push_back(plan_to_json(plan_shield(target_gap, key_dim, f)));
    } catch (const Error& e) {
      side.push_back({{"family", f}, {"feasible", false}, {"reason", e.what()}});
    }
  }
  Json j;
  j["plan"] = plan_to_json(chosen);
  j["families"] = std::move(side);
  // An eight-qubit shield per key qubit is a commonly quoted figure; it is
  // listed for comparison only.
  j["eight_qubit_remark"] = {{"shield_qubits", 8},
                             {"asserted", false},
                             {"chosen_family_shield_qubits", chosen.shield_qubits}};
  return j;
}

}  // namespace privnet
