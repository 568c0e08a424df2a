#pragma once

// Shield-size planning: the smallest shield dimension whose certified gap
// eta - theta reaches a target, under one of three bound families.

#include <cstdint>
#include <string>
#include <vector>

namespace privnet {

/// pbit-omega: swap-pbit, eta = 1, theta = (2/ln 2)/d_s.
/// lemma1+obs2: eta = log2 d_k, theta = 2 log2(1 + eps), d_s = ceil((d_k - 1)/eps).
/// lemma2+prop2: eta and theta of the PPT-approximation bounds at the
/// smallest admissible eps for each d_s.
const std::vector<std::string>& plan_families();

inline constexpr std::uint64_t kPlanMaxShield = std::uint64_t{1} << 30;

struct ShieldPlan {
  std::string family;
  int key_dim = 2;
  double target_gap = 0.0;
  std::uint64_t shield_dim = 0;
  int shield_qubits = 0;  // ceil(log2 d_s)
  double eps = 0.0;       // distance parameter the bounds are evaluated at
  double eta = 0.0;
  std::string eta_provenance;
  double theta = 0.0;
  std::string theta_provenance;
  double gap = 0.0;
  double overhead_per_memory = 0.0;  // V/M = 1 - eta / log2(d_k d_s)
};

/// Throws BadSpec for an unknown family or target_gap <= 0, Infeasible when
/// target_gap >= log2 d_k or no d_s <= 2^30 reaches it.
ShieldPlan plan_shield(double target_gap, int key_dim, const std::string& family);

}  // namespace privnet
