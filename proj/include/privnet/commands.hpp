#pragma once

// Command implementations behind the privnet CLI. Each returns the JSON it
// would print; errors surface as privnet::Error.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "privnet/figures.hpp"
#include "privnet/scheme.hpp"
#include "privnet/serialize.hpp"

namespace privnet {

/// Writes one CSV per id (and the fig 10 summary) into out_dir. An empty
/// config path uses the default grids. Returns the list of written files.
Json cmd_figures(const std::vector<int>& ids, const std::string& config_path, const std::string& out_dir);

struct VerifyOutcome {
  Json report;  // JSON array of CheckReport records
  std::string table;
  bool ok = true;
};

VerifyOutcome cmd_verify(std::uint64_t seed, std::size_t trials, const std::vector<std::string>& checks);

/// pbit-omega:<d_s>, private:<file> or params:<d_k,d_s,eps>. Throws BadSpec otherwise.
Scheme scheme_from_spec(const std::string& spec, int delta, Mode mode);
Json cmd_scheme(const std::string& spec, int delta, Mode mode);

/// The chosen family's plan plus every family side by side. Throws
/// Infeasible when the chosen family cannot reach the gap.
Json cmd_plan(double target_gap, int key_dim, const std::string& family);

/// Splits "a,b,c" into its items; empty items are dropped.
std::vector<std::string> split_list(const std::string& text);

}  // namespace privnet
