#pragma once

// Closed-form bounds on memory overhead, key rates and repeater rates.
//
// Every function returns a BoundResult. Arguments outside a formula's validity
// domain never throw: the value is still computed when finite (NaN otherwise),
// domain_ok is false and domain_note names the violated inequality. Planners
// sweep grids and need the verdict inline.

#include <string>

namespace privnet {

struct BoundResult {
  std::string name;
  double value = 0.0;
  bool domain_ok = true;
  std::string domain_note;
  std::string formula;
};

/// log2 d_k - log2 d_s: hashing lower bound for conditional shields that are
/// maximally mixed.
BoundResult cor1_hashing_floor(double d_k, double d_s);

/// 1 - 1/(2 - theta/log2 d_k), the overhead fraction of an irreducible private
/// state scheme that repeats at most theta.
BoundResult thm1_overhead_fraction(double d_k, double theta);

/// 1/2 - theta/log2 d_H for any (theta, eta)-good scheme.
BoundResult thm2_overhead_fraction(double theta, double log_dh);

struct Fig5Chain {
  BoundResult entropy_line;      // S(A)/2 + E_D/2
  BoundResult one_way_line;      // 2 E_D
  BoundResult cost_line;         // E_D/2 + E_c/2
  double entropy_crossing = 0.0; // E_D where entropy_line meets one_way_line, S(A)/3
  double cost_crossing = 0.0;    // E_D where one_way_line meets cost_line, E_c/3
};

/// Upper bounds on one-way repeater rates as functions of one-way
/// distillable entanglement.
Fig5Chain fig5_chain(double s_a, double e_d_oneway, double e_c);

/// 2 log2(1 + eps): repeater bound from the attacked distance eps.
BoundResult obs2_repeater_bound(double eps);
/// (2/ln 2) eps, first-order form of obs2_repeater_bound; never smaller.
BoundResult obs2_repeater_bound_linear(double eps);

/// (d_k - 1)/eps: shield floor for an attacked distance eps.
BoundResult lemma1_min_shield(double d_k, double eps);

/// 1 - log2 d_k / (log2 d_k + log2((d_k - 1)/eps)).
BoundResult thm3_overhead_fraction(double d_k, double eps);
/// log2 d_k - 2 log2(1 + eps).
BoundResult thm3_gap(double d_k, double eps);

/// 1/(2(d_s + 1)): trace-distance floor between PPT states and pbits.
BoundResult eq29_pbit_ppt_distance_floor(double d_s);
/// (1 - 2 eps)/(2 eps): shield dimension implied by the floor above.
BoundResult eq29_min_shield(double eps);

/// Two-way repeater rate bound for PPT states eps-close to a pbit.
BoundResult prop1_repeater_bound(double eps, double d_s);

/// 1 - 8 eps - 4 h(eps).
BoundResult thm4_eta(double eps);
BoundResult thm4_overhead_fraction(double eps);
/// thm4_eta - prop1_repeater_bound.
BoundResult thm4_gap(double eps, double d_s);

/// ((d_k - 1)/eps)(1 - eps d_k).
BoundResult lemma2_min_shield(double d_k, double eps);

/// (d_k - 1)/(d_s + d_k(d_k - 1)).
BoundResult cor2_distance_floor(double d_k, double d_s);

/// eps/2 ceiling on the key-swapped off-diagonal block of rho^Gamma.
BoundResult cor3_offblock_ceiling(double eps);

/// Two-way repeater rate bound for PPT states eps-close to a pdit.
BoundResult prop2_repeater_bound(double eps, double d_k, double d_s);

/// log2 d_k - 8 eps log2 d_k - 4 h(eps).
BoundResult thm5_eta(double d_k, double eps);
BoundResult thm5_overhead_fraction(double d_k, double eps);
/// thm5_eta - prop2_repeater_bound.
BoundResult thm5_gap(double d_k, double d_s, double eps);

/// ceil((d_k - 1 - eps d_k (d_k - 1))/eps).
BoundResult min_ds_for_eps(double d_k, double eps);

/// h(p) that returns NaN instead of throwing outside [0, 1].
double binary_entropy_or_nan(double p);

}  // namespace privnet
