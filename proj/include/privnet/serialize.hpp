#pragma once

// JSON forms of states, schemes, bound results and verification reports.
// Objects keep a fixed field order so output is byte-stable.

#include <string>

#include "json.hpp"
#include "privnet/bounds.hpp"
#include "privnet/scheme.hpp"
#include "privnet/states.hpp"
#include "privnet/verify.hpp"

namespace privnet {

using Json = nlohmann::ordered_json;

/// { d_k, d_s, flags, matrix: [[re, im], ...] row-major }.
Json state_to_json(const KeyShieldState& state);
/// Throws BadSpec on malformed input, StructureMismatch or NotDensity on bad content.
KeyShieldState state_from_json(const Json& j);

KeyShieldState load_state(const std::string& path);
void save_state(const KeyShieldState& state, const std::string& path);

Json scheme_to_json(const Scheme& s);
Json bound_to_json(const BoundResult& b);
Json check_report_to_json(const CheckReport& r);
/// JSON array of CheckReport records.
Json verify_report_to_json(const VerifyReport& r);

/// Finite doubles as numbers, non-finite ones as the strings "nan", "inf", "-inf".
Json number(double x);

}  // namespace privnet
