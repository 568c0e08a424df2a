#include "privnet/plan.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "privnet/bounds.hpp"
#include "privnet/error.hpp"

namespace privnet {

namespace {

constexpr std::uint64_t kLinearSearchMax = 1024;

struct Candidate {
  double eps = 0.0;
  double eta = 0.0;
  double theta = 0.0;
};

int qubits_for(std::uint64_t d_s) {
  int q = 0;
  while ((std::uint64_t{1} << q) < d_s) ++q;
  return q;
}

// Smallest d_s >= lo with gap(d_s) >= target: linear scan up to 1024, then
// bisection assuming the gap grows with d_s.
std::uint64_t smallest_shield(std::uint64_t lo, double target,
                              const std::function<double(std::uint64_t)>& gap_at) {
  for (std::uint64_t d = lo; d <= kLinearSearchMax; ++d) {
    if (gap_at(d) >= target) return d;
  }
  std::uint64_t bad = kLinearSearchMax;
  std::uint64_t good = kPlanMaxShield;
  if (gap_at(good) < target) return 0;
  while (good - bad > 1) {
    const std::uint64_t mid = bad + (good - bad) / 2;
    if (gap_at(mid) >= target) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  return good;
}

ShieldPlan finish(ShieldPlan p, const Candidate& c) {
  p.eps = c.eps;
  p.eta = c.eta;
  p.theta = c.theta;
  p.gap = c.eta - c.theta;
  p.shield_qubits = qubits_for(p.shield_dim);
  p.overhead_per_memory = 1.0 - c.eta / std::log2(static_cast<double>(p.key_dim) * static_cast<double>(p.shield_dim));
  return p;
}

ShieldPlan plan_pbit(ShieldPlan p) {
  if (p.key_dim != 2) throw Error(ErrorCode::Infeasible, "pbit-omega family requires d_k = 2");
  auto at = [](std::uint64_t d) {
    const double eps = 1.0 / static_cast<double>(d);
    return Candidate{eps, 1.0, obs2_repeater_bound_linear(eps).value};
  };
  const auto d = smallest_shield(2, p.target_gap, [&](std::uint64_t x) {
    const auto c = at(x);
    return c.eta - c.theta;
  });
  if (d == 0) throw Error(ErrorCode::Infeasible, "no shield dimension up to 2^30 reaches the gap");
  p.shield_dim = d;
  p.eta_provenance = "irreducible pbit: eta = 1";
  p.theta_provenance = "linearized attacked-distance bound at eps = 1/d_s";
  return finish(std::move(p), at(d));
}

ShieldPlan plan_lemma1(ShieldPlan p) {
  const double dk = p.key_dim;
  // Largest eps with thm3_gap(d_k, eps) >= target, by bisection.
  double lo = 0.0;
  double hi = dk - 1.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (thm3_gap(dk, mid).value >= p.target_gap) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double eps_ceiling = lo;
  if (!(eps_ceiling > 0.0)) throw Error(ErrorCode::Infeasible, "no positive eps reaches the gap");
  const double floor = lemma1_min_shield(dk, eps_ceiling).value;
  if (!(floor <= static_cast<double>(kPlanMaxShield))) {
    throw Error(ErrorCode::Infeasible, "no shield dimension up to 2^30 reaches the gap");
  }
  auto d = static_cast<std::uint64_t>(std::max(1.0, std::ceil(floor)));
  auto eps_at = [&](std::uint64_t x) { return (dk - 1.0) / static_cast<double>(x); };
  while (d > 1 && thm3_gap(dk, eps_at(d - 1)).value >= p.target_gap) --d;
  while (thm3_gap(dk, eps_at(d)).value < p.target_gap) ++d;
  p.shield_dim = d;
  const double eps = eps_at(d);
  p.eta_provenance = "irreducible private state: eta = log2 d_k";
  p.theta_provenance = "2 log2(1 + eps) at the smallest attacked distance (d_k - 1)/d_s";
  return finish(std::move(p), Candidate{eps, std::log2(dk), obs2_repeater_bound(eps).value});
}

ShieldPlan plan_lemma2(ShieldPlan p) {
  const double dk = p.key_dim;
  auto at = [&](std::uint64_t x) {
    const double ds = static_cast<double>(x);
    const double eps = cor2_distance_floor(dk, ds).value;
    return Candidate{eps, thm5_eta(dk, eps).value, prop2_repeater_bound(eps, dk, ds).value};
  };
  const auto d = smallest_shield(2, p.target_gap, [&](std::uint64_t x) {
    const auto c = at(x);
    const double g = c.eta - c.theta;
    return std::isfinite(g) ? g : -std::numeric_limits<double>::infinity();
  });
  if (d == 0) throw Error(ErrorCode::Infeasible, "no shield dimension up to 2^30 reaches the gap");
  p.shield_dim = d;
  p.eta_provenance = "log2 d_k - 8 eps log2 d_k - 4 h(eps) at the distance floor";
  p.theta_provenance = "PPT-approximation repeater bound at eps = (d_k - 1)/(d_s + d_k(d_k - 1))";
  return finish(std::move(p), at(d));
}

}  // namespace

const std::vector<std::string>& plan_families() {
  static const std::vector<std::string> names{"pbit-omega", "lemma1+obs2", "lemma2+prop2"};
  return names;
}

ShieldPlan plan_shield(double target_gap, int key_dim, const std::string& family) {
  const auto& fams = plan_families();
  if (std::find(fams.begin(), fams.end(), family) == fams.end()) {
    throw Error(ErrorCode::BadSpec, "unknown plan family '" + family + "'");
  }
  if (key_dim < 2) throw Error(ErrorCode::BadSpec, "d_k must be >= 2");
  if (!(target_gap > 0.0)) throw Error(ErrorCode::BadSpec, "target gap must be positive");
  if (!(target_gap < std::log2(static_cast<double>(key_dim)))) {
    throw Error(ErrorCode::Infeasible, "target gap must be below log2 d_k");
  }
  ShieldPlan p;
  p.family = family;
  p.key_dim = key_dim;
  p.target_gap = target_gap;
  if (family == "pbit-omega") return plan_pbit(std::move(p));
  if (family == "lemma1+obs2") return plan_lemma1(std::move(p));
  return plan_lemma2(std::move(p));
}

}  // namespace privnet
