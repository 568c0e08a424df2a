#include "privnet/serialize.hpp"

#include <cmath>
#include <fstream>

#include "privnet/error.hpp"

namespace privnet {

Json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

Json state_to_json(const KeyShieldState& state) {
  Json j;
  j["d_k"] = state.key_dim();
  j["d_s"] = state.shield_dim();
  const auto& f = state.flags();
  j["flags"] = {{"private_by_construction", f.private_by_construction},
                {"irreducible_by_construction", f.irreducible_by_construction},
                {"shields_separable_by_construction", f.shields_separable_by_construction}};
  Json entries = Json::array();
  const CMatrix& m = state.matrix();
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) entries.push_back({m(r, c).real(), m(r, c).imag()});
  j["matrix"] = std::move(entries);
  return j;
}

KeyShieldState state_from_json(const Json& j) {
  try {
    const auto d_k = j.at("d_k").get<std::size_t>();
    const auto d_s = j.at("d_s").get<std::size_t>();
    ProvenanceFlags flags;
    if (j.contains("flags")) {
      const auto& f = j.at("flags");
      flags.private_by_construction = f.value("private_by_construction", false);
      flags.irreducible_by_construction = f.value("irreducible_by_construction", false);
      flags.shields_separable_by_construction = f.value("shields_separable_by_construction", false);
    }
    const auto& entries = j.at("matrix");
    const std::size_t dim = d_k * d_k * d_s * d_s;
    if (d_k == 0 || d_s == 0 || dim > kMaxDim || entries.size() != dim * dim) {
      throw Error(ErrorCode::StructureMismatch,
                  "matrix has " + std::to_string(entries.size()) + " entries, expected " +
                      std::to_string(dim * dim));
    }
    CMatrix m(dim);
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const auto& e = entries[k];
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::BadSpec, "matrix entries must be [re, im]");
      m(k / dim, k % dim) = Complex(e[0].get<double>(), e[1].get<double>());
    }
    // Flags are taken from the file as written; the witness is not stored.
    return KeyShieldState(std::move(m), d_k, d_s, flags);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::BadSpec, std::string("malformed state JSON: ") + e.what());
  }
}

KeyShieldState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadSpec, "cannot open state file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::BadSpec, "cannot parse state file '" + path + "': " + e.what());
  }
  return state_from_json(j);
}

void save_state(const KeyShieldState& state, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::BadSpec, "cannot write state file '" + path + "'");
  out << state_to_json(state).dump(2) << '\n';
}

Json scheme_to_json(const Scheme& s) {
  Json j;
  j["state"] = s.state;
  j["log_dim_H"] = number(s.log_dim_h);
  j["delta"] = s.delta;
  j["eta"] = number(s.eta);
  j["eta_provenance"] = s.eta_provenance;
  j["theta"] = number(s.theta);
  j["theta_provenance"] = s.theta_provenance;
  j["mode"] = to_string(s.mode);
  return j;
}

Json bound_to_json(const BoundResult& b) {
  Json j;
  j["name"] = b.name;
  j["value"] = number(b.value);
  j["domain_ok"] = b.domain_ok;
  j["domain_note"] = b.domain_note;
  j["formula"] = b.formula;
  return j;
}

Json check_report_to_json(const CheckReport& r) {
  Json j;
  j["check_name"] = r.check_name;
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["worst_margin"] = number(r.worst_margin);
  j["seed"] = r.seed;
  j["excluded"] = r.excluded;
  Json details = Json::array();
  for (const auto& d : r.details) {
    details.push_back({{"trial", d.trial}, {"what", d.what}, {"margin", number(d.margin)}});
  }
  j["details"] = std::move(details);
  return j;
}

Json verify_report_to_json(const VerifyReport& r) {
  Json j = Json::array();
  for (const auto& c : r.reports) j.push_back(check_report_to_json(c));
  return j;
}

}  // namespace privnet
