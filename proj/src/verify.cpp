#include "privnet/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>

#include "privnet/bounds.hpp"
#include "privnet/error.hpp"
#include "privnet/measures.hpp"

namespace privnet {

namespace {

// Accumulates margins of one check; a margin below -kCheckTol is a failure.
class Tally {
 public:
  Tally(std::string name, std::uint64_t seed) {
    report_.check_name = std::move(name);
    report_.seed = seed;
  }

  void begin_trial() { ++report_.trials; }
  void exclude() { ++report_.excluded; }

  // Records one margin; returns false on failure.
  bool record(std::size_t trial, double margin, const std::string& what) {
    margin += 0.0;  // no negative zero in reports
    if (!seen_ || margin < report_.worst_margin || std::isnan(margin)) {
      report_.worst_margin = std::isnan(margin) ? -std::numeric_limits<double>::max() : margin;
      seen_ = true;
    }
    if (margin >= -kCheckTol) return true;
    ++failed_in_trial_;
    if (report_.details.size() < kMaxDetails) report_.details.push_back({trial, what, margin});
    return false;
  }

  void end_trial() {
    if (failed_in_trial_ > 0) ++report_.failures;
    failed_in_trial_ = 0;
  }

  CheckReport finish() && { return std::move(report_); }

 private:
  static constexpr std::size_t kMaxDetails = 20;
  CheckReport report_;
  bool seen_ = false;
  std::size_t failed_in_trial_ = 0;
};

Rng trial_rng(std::uint64_t seed, std::string_view name, std::size_t trial) {
  return Rng(stream_seed(seed, name, trial));
}

CMatrix maximally_mixed(std::size_t dim) {
  return CMatrix::identity(dim) * Complex(1.0 / static_cast<double>(dim));
}

CMatrix mix(const CMatrix& a, const CMatrix& b, double weight_b) {
  CMatrix out = a * Complex(1.0 - weight_b);
  out += b * Complex(weight_b);
  return out;
}

// Density matrix supported on the key-off-diagonal subspace |ij>, i != j.
CMatrix key_offdiagonal_noise(std::size_t key_dim, std::size_t shield_dim, Rng& rng) {
  const std::size_t bd = shield_dim * shield_dim;
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < key_dim; ++i)
    for (std::size_t j = 0; j < key_dim; ++j)
      if (i != j)
        for (std::size_t r = 0; r < bd; ++r) support.push_back((i * key_dim + j) * bd + r);
  const CMatrix small = random_density(support.size(), rng);
  CMatrix out(key_dim * key_dim * bd);
  for (std::size_t r = 0; r < support.size(); ++r)
    for (std::size_t c = 0; c < support.size(); ++c) out(support[r], support[c]) = small(r, c);
  return out;
}

KeyShieldState as_state(const CMatrix& m, const KeyShieldState& layout) {
  return KeyShieldState::trusted(m, layout.key_dim(), layout.shield_dim());
}

double distance(const KeyShieldState& a, const KeyShieldState& b) {
  return trace_norm(a.matrix() - b.matrix());
}

KeyShieldState private_with_mixed_shield(std::size_t key_dim, std::size_t shield_dim, Rng& rng) {
  const std::size_t bd = shield_dim * shield_dim;
  PrivateStateSpec spec{key_dim, shield_dim, {}, maximally_mixed(bd)};
  for (std::size_t i = 0; i < key_dim; ++i) spec.unitaries.push_back(random_unitary(bd, rng));
  return private_state(spec, true);
}

std::string dims_label(std::size_t dk, std::size_t ds) {
  return "(d_k=" + std::to_string(dk) + ", d_s=" + std::to_string(ds) + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// PPT samples

bool is_ppt(const KeyShieldState& state, double tol) { return is_psd(state.partial_transpose_bob(), tol); }

PptBoundary ppt_boundary_mix(const KeyShieldState& gamma, const CMatrix& noise, double tol,
                             int max_iterations) {
  auto at = [&](double p) { return as_state(mix(gamma.matrix(), noise, p), gamma); };
  PptBoundary out{at(1.0), 1.0, 0, false, true};
  if (is_ppt(at(0.0))) {
    out.state = at(0.0);
    out.weight = 0.0;
    out.lower_ppt = true;
    return out;
  }
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > tol && out.iterations < max_iterations) {
    const double mid = 0.5 * (lo + hi);
    if (is_ppt(at(mid))) {
      hi = mid;
    } else {
      lo = mid;
    }
    ++out.iterations;
  }
  out.state = at(hi);
  out.weight = hi;
  out.lower_ppt = is_ppt(at(lo));
  out.upper_ppt = is_ppt(out.state);
  return out;
}

PptSample sample_ppt_near(const KeyShieldState& gamma, std::size_t kind, Rng& rng) {
  const std::size_t dk = gamma.key_dim();
  const std::size_t ds = gamma.shield_dim();
  const std::size_t dim = gamma.matrix().dim();
  switch (kind % 3) {
    case 0: {
      const std::size_t terms = 1 + rng.below(6);
      return {random_separable_key_shield(dk, ds, terms, rng),
              "separable(" + std::to_string(terms) + " terms)"};
    }
    case 1: {
      auto b = ppt_boundary_mix(gamma, maximally_mixed(dim));
      return {b.state, "depolarized PPT boundary"};
    }
    default: {
      const double q = rng.uniform();
      const CMatrix tau = random_separable_key_shield(dk, ds, 1 + rng.below(4), rng).matrix();
      const CMatrix noise = mix(maximally_mixed(dim), tau, q);
      auto b = ppt_boundary_mix(gamma, noise);
      // Convex combinations of PPT states stay PPT.
      const double push = rng.uniform() * 0.5 * (1.0 - b.weight);
      const double p = b.weight + push;
      return {as_state(mix(gamma.matrix(), noise, p), gamma), "separable-noise PPT mixture"};
    }
  }
}

// ---------------------------------------------------------------------------
// Checks

CheckReport check_obs1(std::span<const DimPair> dims, std::size_t trials, std::uint64_t seed) {
  Tally tally("obs1", seed);
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, "obs1", t);
    const DimPair d = dims[t % dims.size()];
    const auto gamma = random_private_state(d.key_dim, d.shield_dim, rng);
    tally.begin_trial();
    const double full = coherent_information_key_shield(gamma);
    const double hashing = hashing_bound_private(gamma);
    tally.record(t, -std::abs(full - hashing), "coherent information chain " + dims_label(d.key_dim, d.shield_dim));
    tally.end_trial();
  }
  return std::move(tally).finish();
}

CheckReport check_obs1(std::size_t key_dim, std::size_t shield_dim, std::size_t trials, std::uint64_t seed) {
  const std::array<DimPair, 1> dims{{{key_dim, shield_dim}}};
  return check_obs1(dims, trials, seed);
}

CheckReport check_obs3(std::span<const DimPair> dims, std::size_t trials, std::uint64_t seed) {
  Tally tally("obs3", seed);
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, "obs3", t);
    const DimPair d = dims[t % dims.size()];
    const auto gamma = random_private_state(d.key_dim, d.shield_dim, rng);
    tally.begin_trial();
    const auto dist = attacked_distance(gamma);
    tally.record(t, -std::abs(dist.global - dist.blockform),
                 "attacked distance forms " + dims_label(d.key_dim, d.shield_dim));
    tally.end_trial();
  }
  return std::move(tally).finish();
}

CheckReport check_obs3(std::size_t key_dim, std::size_t shield_dim, std::size_t trials, std::uint64_t seed) {
  const std::array<DimPair, 1> dims{{{key_dim, shield_dim}}};
  return check_obs3(dims, trials, seed);
}

CheckReport check_obs4(std::size_t trials, std::uint64_t seed) {
  static constexpr std::array<DimPair, 3> kDims{{{2, 2}, {3, 2}, {2, 3}}};
  Tally tally("obs4", seed);
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, "obs4", t);
    const DimPair d = kDims[t % kDims.size()];
    const auto gamma = random_private_state(d.key_dim, d.shield_dim, rng);
    const std::size_t dim = gamma.matrix().dim();
    const double p = 0.3 * rng.uniform();
    CMatrix noise = maximally_mixed(dim);
    if (t % 2 == 1) noise = mix(noise, key_offdiagonal_noise(d.key_dim, d.shield_dim, rng), 0.5);
    const auto rho = as_state(mix(gamma.matrix(), noise, p), gamma);
    const double eps = distance(rho, gamma);

    tally.begin_trial();
    const std::size_t dk = d.key_dim;
    double worst_diag = std::numeric_limits<double>::max();
    double offdiag_sum = 0.0;
    for (std::size_t i = 0; i < dk; ++i)
      for (std::size_t j = 0; j < dk; ++j) {
        if (i == j) continue;
        worst_diag = std::min(worst_diag, trace_norm(block(rho, i, i, j, j)));
        offdiag_sum += trace_norm(block(rho, i, j, i, j));
      }
    tally.record(t, worst_diag - (1.0 / static_cast<double>(dk) - eps), "|A_ii,jj| >= 1/d_k - eps");
    tally.record(t, eps - offdiag_sum, "sum |A_ij,ij| <= eps");
    tally.end_trial();
  }
  return std::move(tally).finish();
}

CheckReport check_lemma1(std::size_t trials, std::uint64_t seed) {
  static constexpr std::array<DimPair, 5> kDims{{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}}};
  Tally tally("lemma1", seed);
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, "lemma1", t);
    const DimPair d = kDims[t % kDims.size()];
    const bool omega = d.key_dim == 2 && t % 2 == 0;
    const auto gamma = omega ? swap_pbit(d.shield_dim) : private_with_mixed_shield(d.key_dim, d.shield_dim, rng);
    bool hypothesis = true;
    for (std::size_t i = 0; i < d.key_dim && hypothesis; ++i) {
      hypothesis = is_psd(shield_partial_transpose(block(gamma, i, i, i, i), d.shield_dim), 1e-12);
    }
    if (!hypothesis) {
      tally.exclude();
      continue;
    }
    tally.begin_trial();
    const double eps = attacked_distance(gamma).global;
    tally.record(t, static_cast<double>(d.shield_dim) * eps - static_cast<double>(d.key_dim - 1),
                 "d_s eps >= d_k - 1 " + dims_label(d.key_dim, d.shield_dim));
    tally.end_trial();
  }
  return std::move(tally).finish();
}

CheckReport check_lemma2(std::size_t trials, std::uint64_t seed) {
  static constexpr std::array<DimPair, 4> kDims{{{2, 2}, {3, 2}, {2, 3}, {3, 3}}};
  Tally tally("lemma2", seed);
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, "lemma2", t);
    const DimPair d = kDims[t % kDims.size()];
    const bool omega = d.key_dim == 2 && (t / kDims.size()) % 2 == 0;
    const auto gamma = omega ? swap_pbit(d.shield_dim) : random_private_state(d.key_dim, d.shield_dim, rng);
    const auto sample = sample_ppt_near(gamma, t / 2, rng);
    tally.begin_trial();
    const double eps = distance(sample.rho, gamma);
    const double floor = lemma2_min_shield(static_cast<double>(d.key_dim), eps).value;
    tally.record(t, static_cast<double>(d.shield_dim) - floor,
                 "d_s >= lemma2 floor, " + sample.origin + " " + dims_label(d.key_dim, d.shield_dim));
    tally.end_trial();
  }
  return std::move(tally).finish();
}

CheckReport check_cor2_cor3(std::size_t trials, std::uint64_t seed) {
  Tally tally("cor2_cor3", seed);
  const auto gamma = swap_pbit(2);
  const double floor = cor2_distance_floor(2.0, 2.0).value;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, "cor2_cor3", t);
    const auto sample = sample_ppt_near(gamma, t, rng);
    tally.begin_trial();
    const double eps = distance(sample.rho, gamma);
    tally.record(t, eps - floor, "distance floor, " + sample.origin);
    // (01,10) block of rho^Gamma, i.e. A_{00,11} with its shield transposed.
    const CMatrix pt = sample.rho.partial_transpose_bob();
    const double corner = trace_norm(block(pt, 2, 2, 0, 1, 1, 0));
    tally.record(t, cor3_offblock_ceiling(eps).value - corner, "off-block ceiling, " + sample.origin);
    tally.end_trial();
    // Hypothesis of the two-way pbit repeater bound on rho's own A_{01,10}.
    const double own = trace_norm(shield_partial_transpose(block(sample.rho, 0, 1, 1, 0), 2));
    if (own > eps) tally.exclude();
  }
  return std::move(tally).finish();
}

CheckReport check_gentle_measurement(std::size_t trials, std::uint64_t seed) {
  constexpr std::size_t kDim = 8;
  Tally tally("gentle_measurement", seed);
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, "gentle_measurement", t);
    CMatrix sigma = random_density(kDim, rng) * Complex(rng.uniform_open_zero());
    const CMatrix u = random_unitary(kDim, rng);
    std::vector<double> spectrum(kDim);
    for (auto& x : spectrum) x = rng.uniform();
    const CMatrix h = u * CMatrix::diagonal(spectrum) * u.adjoint();
    for (auto& x : spectrum) x = std::sqrt(x);
    const CMatrix sqrt_h = u * CMatrix::diagonal(spectrum) * u.adjoint();

    tally.begin_trial();
    const double lhs = trace_norm(sigma - sqrt_h * sigma * sqrt_h);
    const double tr = sigma.trace().real();
    const double rest = (sigma * (CMatrix::identity(kDim) - h)).trace().real();
    const double rhs = 2.0 * std::sqrt(tr) * std::sqrt(std::max(rest, 0.0));
    tally.record(t, rhs - lhs, "gentle measurement");
    tally.end_trial();
  }
  return std::move(tally).finish();
}

CheckReport check_fact1(std::size_t trials, std::uint64_t seed) {
  static constexpr std::array<DimPair, 3> kDims{{{2, 2}, {3, 2}, {3, 1}}};
  Tally tally("fact1", seed);
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, "fact1", t);
    const DimPair d = kDims[t % kDims.size()];
    const std::size_t dk = d.key_dim;
    const std::size_t ds = d.shield_dim;
    const std::size_t dim = dk * dk * ds * ds;
    const auto rho = KeyShieldState(random_density(dim, rng), dk, ds);
    const std::size_t i = rng.below(dk);
    const std::size_t j = (i + 1 + rng.below(dk - 1)) % dk;

    tally.begin_trial();
    CMatrix expected(dim);
    for (std::size_t a : {i, j})
      for (std::size_t b : {i, j}) set_block(expected, dk, ds, a, a, b, b, block(rho, a, a, b, b));
    tally.record(t, -max_abs_diff(apply_fact1(rho, i, j), expected), "pair projection");

    CMatrix single(dim);
    set_block(single, dk, ds, i, i, i, i, block(rho, i, i, i, i));
    tally.record(t, -max_abs_diff(apply_fact1(rho, i), single), "single projection");
    tally.end_trial();
  }
  return std::move(tally).finish();
}

CheckReport check_squeeze_psd(std::size_t trials, std::uint64_t seed) {
  static constexpr std::array<DimPair, 3> kDims{{{2, 2}, {3, 2}, {2, 3}}};
  Tally tally("squeeze_psd", seed);
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, "squeeze_psd", t);
    const DimPair d = kDims[t % kDims.size()];
    const auto gamma = d.key_dim == 2 && t % 2 == 0 ? swap_pbit(d.shield_dim)
                                                   : random_private_state(d.key_dim, d.shield_dim, rng);
    const auto sample = sample_ppt_near(gamma, t / kDims.size(), rng);
    tally.begin_trial();
    for (std::size_t i = 0; i < d.key_dim; ++i)
      for (std::size_t j = 0; j < d.key_dim; ++j) {
        if (i == j) continue;
        const auto m = privacy_squeeze_pair(sample.rho, i, j);
        const double mean = 0.5 * (m[0][0] + m[1][1]);
        const double half_diff = 0.5 * (m[0][0] - m[1][1]);
        const double min_eig = mean - std::hypot(half_diff, m[0][1]);
        tally.record(t, min_eig, "squeezed matrix PSD, " + sample.origin);
        tally.record(t, mean - m[0][1], "off-block <= mean of diagonal blocks, " + sample.origin);
      }
    tally.end_trial();
  }
  return std::move(tally).finish();
}

CheckReport check_pt_block_formula(std::size_t trials, std::uint64_t seed) {
  static constexpr std::array<DimPair, 4> kDims{{{2, 2}, {3, 2}, {2, 3}, {2, 1}}};
  Tally tally("pt_block_formula", seed);
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, "pt_block_formula", t);
    const DimPair d = kDims[t % kDims.size()];
    const std::size_t dk = d.key_dim;
    const std::size_t ds = d.shield_dim;
    const auto gamma = random_private_state(dk, ds, rng);
    tally.begin_trial();
    const CMatrix full = gamma.partial_transpose_bob();
    CMatrix from_blocks(full.dim());
    CMatrix from_witness(full.dim());
    const auto& w = *gamma.witness();
    for (std::size_t i = 0; i < dk; ++i)
      for (std::size_t j = 0; j < dk; ++j) {
        set_block(from_blocks, dk, ds, i, j, j, i, shield_partial_transpose(block(gamma, i, i, j, j), ds));
        const CMatrix x = w.unitaries[i] * w.shield * w.unitaries[j].adjoint();
        set_block(from_witness, dk, ds, i, j, j, i,
                  shield_partial_transpose(x, ds) * Complex(1.0 / static_cast<double>(dk)));
      }
    // Re-indexing only: must be bit-exact.
    tally.record(t, full == from_blocks ? 0.0 : -max_abs_diff(full, from_blocks) - kCheckTol,
                 "block reassembly (bit-exact)");
    tally.record(t, -max_abs_diff(full, from_witness), "witness rebuild");
    tally.end_trial();
  }
  return std::move(tally).finish();
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"obs1",   "obs3",      "obs4",
                                              "lemma1", "lemma2",    "cor2_cor3",
                                              "gentle_measurement", "fact1", "squeeze_psd",
                                              "pt_block_formula"};
  return names;
}

VerifyReport run_all(std::uint64_t seed, std::size_t trials_per_check, const std::vector<std::string>& only) {
  for (const auto& name : only) {
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end()) {
      throw Error(ErrorCode::BadSpec, "unknown check '" + name + "'");
    }
  }
  VerifyReport out;
  if (trials_per_check == 0) return out;

  static constexpr std::array<DimPair, 4> kPrivateDims{{{2, 2}, {2, 3}, {3, 2}, {3, 3}}};
  const std::vector<std::pair<std::string, std::function<CheckReport()>>> suites{
      {"obs1", [&] { return check_obs1(kPrivateDims, trials_per_check, seed); }},
      {"obs3", [&] { return check_obs3(kPrivateDims, trials_per_check, seed); }},
      {"obs4", [&] { return check_obs4(trials_per_check, seed); }},
      {"lemma1", [&] { return check_lemma1(trials_per_check, seed); }},
      {"lemma2", [&] { return check_lemma2(trials_per_check, seed); }},
      {"cor2_cor3", [&] { return check_cor2_cor3(trials_per_check, seed); }},
      {"gentle_measurement", [&] { return check_gentle_measurement(trials_per_check, seed); }},
      {"fact1", [&] { return check_fact1(trials_per_check, seed); }},
      {"squeeze_psd", [&] { return check_squeeze_psd(trials_per_check, seed); }},
      {"pt_block_formula", [&] { return check_pt_block_formula(trials_per_check, seed); }},
  };
  for (const auto& [name, run] : suites) {
    if (!only.empty() && std::find(only.begin(), only.end(), name) == only.end()) continue;
    out.reports.push_back(run());
    out.total_failures += out.reports.back().failures;
  }
  return out;
}

}  // namespace privnet
