#pragma once

// Numerical verification suites: identities and inequalities about private
// states, checked against direct matrix computation on constructed and
// randomized instances.
//
// Every trial draws from its own RNG stream, stream_seed(seed, check, trial),
// so a report depends only on its arguments.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "privnet/random.hpp"
#include "privnet/states.hpp"

namespace privnet {

inline constexpr double kCheckTol = 1e-8;
inline constexpr double kBisectionTol = 1e-10;
inline constexpr int kBisectionMaxIterations = 60;

struct CheckFailure {
  std::size_t trial = 0;
  std::string what;
  double margin = 0.0;
};

struct CheckReport {
  std::string check_name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double worst_margin = 0.0;  // most negative slack observed
  std::uint64_t seed = 0;
  std::size_t excluded = 0;  // samples outside a hypothesis, not counted as trials of it
  std::vector<CheckFailure> details;
};

struct DimPair {
  std::size_t key_dim;
  std::size_t shield_dim;
};

/// Full-state coherent information equals the hashing bound of a private state.
CheckReport check_obs1(std::span<const DimPair> dims, std::size_t trials, std::uint64_t seed);
CheckReport check_obs1(std::size_t key_dim, std::size_t shield_dim, std::size_t trials, std::uint64_t seed);

/// Full-matrix and block forms of the attacked distance agree.
CheckReport check_obs3(std::span<const DimPair> dims, std::size_t trials, std::uint64_t seed);
CheckReport check_obs3(std::size_t key_dim, std::size_t shield_dim, std::size_t trials, std::uint64_t seed);

/// ||rho - gamma|| <= eps implies |A_{ii,jj}| >= 1/d_k - eps and
/// sum_{i != j} |A_{ij,ij}| <= eps.
CheckReport check_obs4(std::size_t trials, std::uint64_t seed);

/// d_s * eps >= d_k - 1 for private states with PSD X_ii^Gamma.
CheckReport check_lemma1(std::size_t trials, std::uint64_t seed);

/// d_s >= ((d_k - 1)/eps)(1 - eps d_k) for PPT states eps-close to a private state.
CheckReport check_lemma2(std::size_t trials, std::uint64_t seed);

/// Distance floor for PPT states near the swap-pbit and the eps/2 ceiling on
/// the (01,10) block of rho^Gamma.
CheckReport check_cor2_cor3(std::size_t trials, std::uint64_t seed);

/// ||sigma - sqrt(H) sigma sqrt(H)|| <= 2 sqrt(Tr sigma) sqrt(Tr sigma (I - H)).
CheckReport check_gentle_measurement(std::size_t trials, std::uint64_t seed);

/// Projection onto key pairs equals the explicit block sums (bit-exact).
CheckReport check_fact1(std::size_t trials, std::uint64_t seed);

/// Privacy-squeezed 2x2 norm matrix is PSD for PPT states.
CheckReport check_squeeze_psd(std::size_t trials, std::uint64_t seed);

/// Partial transpose of a private state equals its block-level form.
CheckReport check_pt_block_formula(std::size_t trials, std::uint64_t seed);

struct VerifyReport {
  std::vector<CheckReport> reports;
  std::size_t total_failures = 0;
  bool ok() const noexcept { return total_failures == 0; }
};

/// Names accepted by run_all's filter, in execution order.
const std::vector<std::string>& check_names();

/// Runs the selected checks (all when `only` is empty). trials == 0 yields an
/// empty report. Throws BadSpec for an unknown check name.
VerifyReport run_all(std::uint64_t seed, std::size_t trials_per_check,
                     const std::vector<std::string>& only = {});

// -- PPT sample generation ----------------------------------------------------

struct PptBoundary {
  KeyShieldState state;  // PPT mixture at the upper end of the final bracket
  double weight = 1.0;   // noise weight of `state`
  int iterations = 0;
  bool lower_ppt = false;  // PPT verdict at the lower end of the bracket
  bool upper_ppt = true;   // PPT verdict at the upper end
};

/// True iff the partial transpose over Bob's side is PSD within tol.
bool is_ppt(const KeyShieldState& state, double tol = 1e-12);

/// Bisects p in (1 - p) gamma + p noise for the smallest PPT mixture.
/// `noise` must itself be PPT.
PptBoundary ppt_boundary_mix(const KeyShieldState& gamma, const CMatrix& noise,
                             double tol = kBisectionTol, int max_iterations = kBisectionMaxIterations);

struct PptSample {
  KeyShieldState rho;
  std::string origin;
};

/// One PPT state on the layout of `gamma`: a random separable state, the
/// depolarizing PPT boundary of gamma, or a boundary mixture with separable
/// noise pushed further into the PPT set. `kind` selects among them modulo 3.
PptSample sample_ppt_near(const KeyShieldState& gamma, std::size_t kind, Rng& rng);

}  // namespace privnet
