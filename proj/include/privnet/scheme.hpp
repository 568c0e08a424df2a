#pragma once

// Secure network scheme: a link state held between a hub and an end user,
// the hub's per-link memory, the node degree and certified bounds on the
// distillable key (eta) and on the key repeater rate (theta).

#include <string>

namespace privnet {

enum class Mode { OneWay, TwoWay };

const char* to_string(Mode mode) noexcept;
/// "one-way" or "two-way"; throws BadSpec otherwise.
Mode parse_mode(const std::string& text);

struct Scheme {
  std::string state;          // descriptor of the link state
  double log_dim_h = 1.0;     // log2 dim of the hub's share of one link
  int delta = 1;              // node degree
  double eta = 0.0;           // certified lower bound on the distillable key
  std::string eta_provenance;
  double theta = 0.0;         // certified upper bound on the repeater rate
  std::string theta_provenance;
  Mode mode = Mode::TwoWay;
};

/// Throws DomainError unless delta >= 1, log_dim_h >= 1, 0 <= eta <= log_dim_h.
void validate(const Scheme& s);

/// delta * log_dim_h.
double memory(const Scheme& s);
/// eta / log_dim_h. Throws DomainError if log_dim_h < 1.
double density(const Scheme& s);
/// delta * (log_dim_h - eta).
double overhead(const Scheme& s);
/// eta - theta; negative values are reported as-is.
double gap(const Scheme& s);
/// eta > theta (strict).
bool is_good(const Scheme& s);

struct HomomorphicReport {
  Scheme extended;
  double memory = 0.0;
  double density = 0.0;
  double overhead = 0.0;
  double overhead_increase = 0.0;  // V' - V = delta (a - 1) log_dim_h
  double per_link_increase = 0.0;   // (a - 1) log_dim_h, without the degree
  bool degree_mismatch = false;     // the two differ (delta > 1 and a > 1)
};

/// Scales the hub memory by `a` qubits per stored qubit, keeping eta and theta.
HomomorphicReport homomorphic_extend(const Scheme& s, int a);

/// Scheme over the swap-pbit with shield dimension d_s: eta = 1,
/// theta = (2/ln 2)/d_s, log_dim_h = 1 + log2 d_s.
Scheme build_scheme_from_pbit(int d_s, int delta, Mode mode);

}  // namespace privnet
