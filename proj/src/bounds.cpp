#include "privnet/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace privnet {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Collects violated domain conditions for one bound evaluation.
class Domain {
 public:
  void require(bool ok, const char* condition) {
    if (ok) return;
    if (!note_.empty()) note_ += "; ";
    note_ += "violated: ";
    note_ += condition;
  }

  BoundResult finish(const char* name, double value, const char* formula) const {
    BoundResult r;
    r.name = name;
    r.value = value;
    r.domain_ok = note_.empty() && std::isfinite(value);
    r.domain_note = note_;
    if (!r.domain_ok && r.domain_note.empty()) r.domain_note = "value is not finite";
    r.formula = formula;
    return r;
  }

 private:
  std::string note_;
};

// (1 + t) h(t / (1 + t)); the combination shared by both repeater bounds.
double expanded_entropy(double t) {
  if (t == 0.0) return 0.0;
  return (1.0 + t) * binary_entropy_or_nan(t / (1.0 + t));
}

double shifted_entropy(double eps) {
  const double half = eps / 2.0;
  return (1.0 + half) * binary_entropy_or_nan(half / (1.0 + half));
}

}  // namespace

double binary_entropy_or_nan(double p) {
  if (!(p >= 0.0 && p <= 1.0)) return kNaN;
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

BoundResult cor1_hashing_floor(double d_k, double d_s) {
  Domain d;
  d.require(d_k >= 1.0, "d_k >= 1");
  d.require(d_s >= 1.0, "d_s >= 1");
  return d.finish("cor1_hashing_floor", std::log2(d_k) - std::log2(d_s), "log2 d_k - log2 d_s");
}

BoundResult thm1_overhead_fraction(double d_k, double theta) {
  Domain d;
  d.require(d_k >= 2.0, "d_k >= 2");
  const double log_dk = std::log2(d_k);
  d.require(theta < 2.0 * log_dk, "theta < 2 log2 d_k");
  return d.finish("thm1_overhead_fraction", 1.0 - 1.0 / (2.0 - theta / log_dk),
                  "1 - 1/(2 - theta/log2 d_k)");
}

BoundResult thm2_overhead_fraction(double theta, double log_dh) {
  Domain d;
  d.require(log_dh > 0.0, "log2 d_H > 0");
  return d.finish("thm2_overhead_fraction", 0.5 - theta / log_dh, "1/2 - theta/log2 d_H");
}

Fig5Chain fig5_chain(double s_a, double e_d_oneway, double e_c) {
  Domain d;
  d.require(s_a >= 0.0, "S(A) >= 0");
  d.require(e_d_oneway >= 0.0, "E_D >= 0");
  d.require(e_c >= 0.0, "E_c >= 0");
  Fig5Chain out;
  out.entropy_line = d.finish("fig5_entropy_line", s_a / 2.0 + e_d_oneway / 2.0, "S(A)/2 + E_D/2");
  out.one_way_line = d.finish("fig5_one_way_line", 2.0 * e_d_oneway, "2 E_D");
  out.cost_line = d.finish("fig5_cost_line", e_d_oneway / 2.0 + e_c / 2.0, "E_D/2 + E_c/2");
  out.entropy_crossing = s_a / 3.0;
  out.cost_crossing = e_c / 3.0;
  return out;
}

BoundResult obs2_repeater_bound(double eps) {
  Domain d;
  d.require(eps >= 0.0, "eps >= 0");
  return d.finish("obs2_repeater_bound", 2.0 * std::log2(1.0 + eps), "2 log2(1 + eps)");
}

BoundResult obs2_repeater_bound_linear(double eps) {
  Domain d;
  d.require(eps >= 0.0, "eps >= 0");
  return d.finish("obs2_repeater_bound_linear", 2.0 / std::numbers::ln2 * eps, "(2/ln 2) eps");
}

BoundResult lemma1_min_shield(double d_k, double eps) {
  Domain d;
  d.require(d_k >= 2.0, "d_k >= 2");
  d.require(eps > 0.0, "eps > 0");
  return d.finish("lemma1_min_shield", (d_k - 1.0) / eps, "(d_k - 1)/eps");
}

BoundResult thm3_overhead_fraction(double d_k, double eps) {
  Domain d;
  d.require(d_k >= 2.0, "d_k >= 2");
  d.require(eps > 0.0, "eps > 0");
  d.require(eps < d_k - 1.0, "eps < d_k - 1");
  const double log_dk = std::log2(d_k);
  double value;
  if (eps == 0.0) {
    value = 1.0;  // the shield term diverges
  } else {
    value = 1.0 - log_dk / (log_dk + std::log2((d_k - 1.0) / eps));
  }
  return d.finish("thm3_overhead_fraction", value, "1 - log2 d_k/(log2 d_k + log2((d_k - 1)/eps))");
}

BoundResult thm3_gap(double d_k, double eps) {
  Domain d;
  d.require(d_k >= 2.0, "d_k >= 2");
  d.require(eps > 0.0, "eps > 0");
  d.require(eps < d_k - 1.0, "eps < d_k - 1");
  return d.finish("thm3_gap", std::log2(d_k) - 2.0 * std::log2(1.0 + eps), "log2 d_k - 2 log2(1 + eps)");
}

BoundResult eq29_pbit_ppt_distance_floor(double d_s) {
  Domain d;
  d.require(d_s >= 1.0, "d_s >= 1");
  return d.finish("eq29_pbit_ppt_distance_floor", 1.0 / (2.0 * (d_s + 1.0)), "1/(2(d_s + 1))");
}

BoundResult eq29_min_shield(double eps) {
  Domain d;
  d.require(eps > 0.0, "eps > 0");
  d.require(eps < 0.5, "eps < 1/2");
  return d.finish("eq29_min_shield", (1.0 - 2.0 * eps) / (2.0 * eps), "(1 - 2 eps)/(2 eps)");
}

BoundResult prop1_repeater_bound(double eps, double d_s) {
  Domain d;
  d.require(d_s >= 1.0, "d_s >= 1");
  d.require(eps >= 1.0 / (2.0 * (d_s + 1.0)), "eps >= 1/(2(d_s + 1))");
  const double root = std::sqrt(eps);
  const double value =
      2.0 * (root + 1.5 * eps) * (1.0 + std::log2(d_s)) + expanded_entropy(2.0 * root + 3.0 * eps);
  return d.finish("prop1_repeater_bound", value,
                  "2(sqrt eps + 3eps/2)(1 + log2 d_s) + (1 + 2 sqrt eps + 3 eps) "
                  "h((2 sqrt eps + 3 eps)/(1 + 2 sqrt eps + 3 eps))");
}

BoundResult thm4_eta(double eps) {
  Domain d;
  d.require(eps >= 0.0, "eps >= 0");
  d.require(eps < 0.5, "eps < 1/2");
  return d.finish("thm4_eta", 1.0 - 8.0 * eps - 4.0 * binary_entropy_or_nan(eps), "1 - 8 eps - 4 h(eps)");
}

BoundResult thm4_overhead_fraction(double eps) {
  Domain d;
  d.require(eps > 0.0, "eps > 0");
  d.require(eps < 0.5, "eps < 1/2");
  double value;
  if (eps == 0.0) {
    value = 1.0;
  } else {
    const double denominator = 1.0 + std::log2((1.0 - 2.0 * eps) / (2.0 * eps));
    d.require(denominator > 0.0, "1 + log2((1 - 2 eps)/(2 eps)) > 0");
    value = 1.0 - (1.0 + shifted_entropy(eps)) / denominator - eps / 2.0;
  }
  return d.finish("thm4_overhead_fraction", value,
                  "1 - [1 + (1 + eps/2) h((eps/2)/(1 + eps/2))]/[1 + log2((1 - 2 eps)/(2 eps))] - eps/2");
}

BoundResult thm4_gap(double eps, double d_s) {
  Domain d;
  d.require(d_s >= 1.0, "d_s >= 1");
  d.require(eps >= 1.0 / (2.0 * (d_s + 1.0)), "eps >= 1/(2(d_s + 1))");
  d.require(eps < 0.5, "eps < 1/2");
  const double value = thm4_eta(eps).value - prop1_repeater_bound(eps, d_s).value;
  return d.finish("thm4_gap", value, "thm4_eta(eps) - prop1_repeater_bound(eps, d_s)");
}

BoundResult lemma2_min_shield(double d_k, double eps) {
  Domain d;
  d.require(d_k >= 2.0, "d_k >= 2");
  d.require(eps > 0.0, "eps > 0");
  d.require(eps < 1.0 / d_k, "eps < 1/d_k");
  return d.finish("lemma2_min_shield", (d_k - 1.0) / eps * (1.0 - eps * d_k), "((d_k - 1)/eps)(1 - eps d_k)");
}

BoundResult cor2_distance_floor(double d_k, double d_s) {
  Domain d;
  d.require(d_k >= 2.0, "d_k >= 2");
  d.require(d_s >= 1.0, "d_s >= 1");
  return d.finish("cor2_distance_floor", (d_k - 1.0) / (d_s + d_k * (d_k - 1.0)),
                  "(d_k - 1)/(d_s + d_k(d_k - 1))");
}

BoundResult cor3_offblock_ceiling(double eps) {
  Domain d;
  d.require(eps >= 0.0, "eps >= 0");
  return d.finish("cor3_offblock_ceiling", eps / 2.0, "eps/2");
}

BoundResult prop2_repeater_bound(double eps, double d_k, double d_s) {
  Domain d;
  d.require(d_k >= 2.0, "d_k >= 2");
  d.require(d_s >= 1.0, "d_s >= 1");
  d.require(eps >= (d_k - 1.0) / (d_s + d_k * (d_k - 1.0)), "eps >= (d_k - 1)/(d_s + d_k(d_k - 1))");
  const double root = std::sqrt(eps);
  const double s = root + eps;
  // (1 + 2s) h(s/(1/2 + s)) == (1 + t) h(t/(1 + t)) with t = 2s
  const double value = 2.0 * s * std::log2(d_k * d_s) + expanded_entropy(2.0 * s);
  return d.finish("prop2_repeater_bound", value,
                  "2(sqrt eps + eps) log2(d_k d_s) + (1 + 2 sqrt eps + 2 eps) "
                  "h((sqrt eps + eps)/(1/2 + sqrt eps + eps))");
}

BoundResult thm5_eta(double d_k, double eps) {
  Domain d;
  d.require(d_k >= 2.0, "d_k >= 2");
  d.require(eps >= 0.0, "eps >= 0");
  d.require(eps < 1.0 / d_k, "eps < 1/d_k");
  const double log_dk = std::log2(d_k);
  return d.finish("thm5_eta", log_dk - 8.0 * eps * log_dk - 4.0 * binary_entropy_or_nan(eps),
                  "log2 d_k - 8 eps log2 d_k - 4 h(eps)");
}

BoundResult thm5_overhead_fraction(double d_k, double eps) {
  Domain d;
  d.require(d_k >= 2.0, "d_k >= 2");
  d.require(eps > 0.0, "eps > 0");
  d.require(eps < 1.0 / d_k, "eps < 1/d_k");
  double value;
  if (eps == 0.0) {
    value = 1.0;
  } else {
    const double log_dk = std::log2(d_k);
    const double denominator =
        log_dk + std::log2((d_k - 1.0) / eps) + std::log2(1.0 - eps * d_k);
    d.require(denominator > 0.0, "positive denominator of f(d_k, eps)");
    const double f = (log_dk + shifted_entropy(eps)) / denominator;
    value = 1.0 - eps / 2.0 - f;
  }
  return d.finish("thm5_overhead_fraction", value,
                  "1 - eps/2 - [log2 d_k + (1 + eps/2) h((eps/2)/(1 + eps/2))]"
                  "/[log2 d_k + log2((d_k - 1)/eps) + log2(1 - eps d_k)]");
}

BoundResult thm5_gap(double d_k, double d_s, double eps) {
  Domain d;
  d.require(d_k >= 2.0, "d_k >= 2");
  d.require(d_s >= 1.0, "d_s >= 1");
  d.require(eps >= (d_k - 1.0) / (d_s + d_k * (d_k - 1.0)), "eps >= (d_k - 1)/(d_s + d_k(d_k - 1))");
  d.require(eps < 1.0 / d_k, "eps < 1/d_k");
  const double value = thm5_eta(d_k, eps).value - prop2_repeater_bound(eps, d_k, d_s).value;
  return d.finish("thm5_gap", value, "thm5_eta(d_k, eps) - prop2_repeater_bound(eps, d_k, d_s)");
}

BoundResult min_ds_for_eps(double d_k, double eps) {
  Domain d;
  d.require(d_k >= 2.0, "d_k >= 2");
  d.require(eps > 0.0, "eps > 0");
  d.require(eps < 1.0 / d_k, "eps < 1/d_k");
  const double raw = (d_k - 1.0 - eps * d_k * (d_k - 1.0)) / eps;
  const double nearest = std::round(raw);
  const double snapped = std::abs(raw - nearest) <= 1e-9 * std::max(1.0, std::abs(raw)) ? nearest : raw;
  return d.finish("min_ds_for_eps", std::ceil(snapped), "ceil((d_k - 1 - eps d_k (d_k - 1))/eps)");
}

}  // namespace privnet
