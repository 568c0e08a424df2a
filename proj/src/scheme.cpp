#include "privnet/scheme.hpp"

#include <cmath>

#include "privnet/bounds.hpp"
#include "privnet/error.hpp"

namespace privnet {

const char* to_string(Mode mode) noexcept { return mode == Mode::OneWay ? "one-way" : "two-way"; }

Mode parse_mode(const std::string& text) {
  if (text == "one-way") return Mode::OneWay;
  if (text == "two-way") return Mode::TwoWay;
  throw Error(ErrorCode::BadSpec, "mode must be one-way or two-way, got '" + text + "'");
}

void validate(const Scheme& s) {
  if (s.delta < 1) throw Error(ErrorCode::DomainError, "node degree must be >= 1");
  if (!(s.log_dim_h >= 1.0)) throw Error(ErrorCode::DomainError, "log2 dim_H must be >= 1");
  if (!(s.eta >= 0.0 && s.eta <= s.log_dim_h)) {
    throw Error(ErrorCode::DomainError, "eta must lie in [0, log2 dim_H]");
  }
}

double memory(const Scheme& s) { return s.delta * s.log_dim_h; }

double density(const Scheme& s) {
  if (!(s.log_dim_h >= 1.0)) throw Error(ErrorCode::DomainError, "key density needs dim_H >= 2");
  return s.eta / s.log_dim_h;
}

double overhead(const Scheme& s) { return s.delta * (s.log_dim_h - s.eta); }

double gap(const Scheme& s) { return s.eta - s.theta; }

bool is_good(const Scheme& s) { return s.eta > s.theta; }

HomomorphicReport homomorphic_extend(const Scheme& s, int a) {
  if (a < 1) throw Error(ErrorCode::DomainError, "memory multiplier must be >= 1");
  HomomorphicReport r;
  r.extended = s;
  r.extended.log_dim_h = a * s.log_dim_h;
  r.memory = memory(r.extended);
  r.density = density(r.extended);
  r.overhead = overhead(r.extended);
  r.overhead_increase = r.overhead - overhead(s);
  r.per_link_increase = (a - 1) * s.log_dim_h;
  r.degree_mismatch = std::abs(r.overhead_increase - r.per_link_increase) > 1e-12;
  return r;
}

Scheme build_scheme_from_pbit(int d_s, int delta, Mode mode) {
  if (d_s < 2) throw Error(ErrorCode::DomainError, "swap-pbit needs d_s >= 2");
  const double eps = 1.0 / d_s;
  Scheme s;
  s.state = "pbit-omega:" + std::to_string(d_s);
  s.log_dim_h = 1.0 + std::log2(static_cast<double>(d_s));
  s.delta = delta;
  s.eta = 1.0;
  s.eta_provenance = "irreducible swap-pbit: distillable key equals log2 d_k = 1";
  s.theta = obs2_repeater_bound_linear(eps).value;
  s.theta_provenance = "(2/ln 2) eps with attacked distance eps = 1/d_s";
  s.mode = mode;
  validate(s);
  return s;
}

}  // namespace privnet
