#include "privnet/figures.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>

#include "privnet/bounds.hpp"
#include "privnet/error.hpp"

namespace privnet {

using Json = nlohmann::ordered_json;

namespace {

template <typename T>
T read_field(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw Error(ErrorCode::BadGrid, std::string("grid field '") + key + "' has the wrong type");
  }
}

void require_dims(const std::vector<int>& dims, const char* what) {
  if (dims.empty()) throw Error(ErrorCode::BadGrid, std::string(what) + " must not be empty");
  for (int d : dims) {
    if (d < 2) throw Error(ErrorCode::BadGrid, std::string(what) + " entries must be >= 2");
  }
}

void add(FigureSeries& s, double x, const std::string& label, const BoundResult& b) {
  s.rows.push_back({x, label, b.value, b.domain_ok});
}

// Labels compare numerically when both parse as numbers.
bool label_less(const std::string& a, const std::string& b) {
  double x = 0.0;
  double y = 0.0;
  const auto ra = std::from_chars(a.data(), a.data() + a.size(), x);
  const auto rb = std::from_chars(b.data(), b.data() + b.size(), y);
  const bool na = ra.ec == std::errc() && ra.ptr == a.data() + a.size();
  const bool nb = rb.ec == std::errc() && rb.ptr == b.data() + b.size();
  if (na && nb && x != y) return x < y;
  if (na != nb) return na;
  return a < b;
}

void sort_rows(FigureSeries& s) {
  std::stable_sort(s.rows.begin(), s.rows.end(), [](const FigureRow& a, const FigureRow& b) {
    if (a.label != b.label) return label_less(a.label, b.label);
    return a.x < b.x;
  });
}

std::vector<double> theta_grid(double d_k, int points) {
  const double hi = 2.0 * std::log2(d_k);
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) out[static_cast<std::size_t>(k)] = hi * k / points;
  return out;
}

// Best thm4 gap over the grid plus the domain boundary.
std::pair<double, double> best_thm4_gap(int d_s, const std::vector<double>& grid, bool in_domain_only) {
  const double boundary = eq29_pbit_ppt_distance_floor(d_s).value;
  double best = -std::numeric_limits<double>::infinity();
  double best_eps = std::numeric_limits<double>::quiet_NaN();
  auto consider = [&](double eps) {
    const auto g = thm4_gap(eps, d_s);
    if (in_domain_only && !g.domain_ok) return;
    if (!std::isfinite(g.value)) return;
    if (g.value > best) {
      best = g.value;
      best_eps = eps;
    }
  };
  for (double eps : grid) consider(eps);
  consider(boundary);
  return {best, best_eps};
}

Json fig10_summary(const GridConfig& c, const std::vector<double>& grid) {
  Json table = Json::array();
  for (int d_s : c.gap_shield_dims) {
    const auto [best, eps] = best_thm4_gap(d_s, grid, true);
    const auto [free_best, free_eps] = best_thm4_gap(d_s, grid, false);
    Json row;
    row["d_s"] = d_s;
    row["eps_floor"] = eq29_pbit_ppt_distance_floor(d_s).value;
    row["positive_gap_in_domain"] = best > 0.0;
    row["best_gap_in_domain"] = std::isfinite(best) ? Json(best) : Json(nullptr);
    row["best_eps_in_domain"] = std::isfinite(eps) ? Json(eps) : Json(nullptr);
    row["positive_gap_ignoring_domain"] = free_best > 0.0;
    row["best_gap_ignoring_domain"] = std::isfinite(free_best) ? Json(free_best) : Json(nullptr);
    row["best_eps_ignoring_domain"] = std::isfinite(free_eps) ? Json(free_eps) : Json(nullptr);
    table.push_back(std::move(row));
  }
  auto lowest = [&](bool in_domain) -> Json {
    for (int d_s = 2; d_s <= c.gap_search_max; ++d_s) {
      if (best_thm4_gap(d_s, grid, in_domain).first > 0.0) return d_s;
    }
    return nullptr;
  };
  Json j;
  j["figure_id"] = 10;
  j["sign_table"] = std::move(table);
  j["search_max_d_s"] = c.gap_search_max;
  j["lowest_positive_d_s_in_domain"] = lowest(true);
  j["lowest_positive_d_s_ignoring_domain"] = lowest(false);
  j["claimed_lowest_d_s"] = 64;
  const Json& found = j["lowest_positive_d_s_in_domain"];
  j["claim_matches_in_domain"] = found.is_number() && found.get<int>() == 64;
  return j;
}

}  // namespace

GridConfig GridConfig::from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::BadGrid, "grid config must be a JSON object");
  static const std::set<std::string> kKeys{"points",          "eps_min",        "eps_max", "key_dims",
                                           "shield_dims",     "gap_shield_dims", "gap_search_max",
                                           "s_a",             "e_c"};
  for (const auto& [key, value] : j.items()) {
    if (!kKeys.contains(key)) throw Error(ErrorCode::BadGrid, "unknown grid field '" + key + "'");
  }
  GridConfig c;
  if (j.contains("points")) c.points = read_field<int>(j, "points");
  if (j.contains("eps_min")) c.eps_min = read_field<double>(j, "eps_min");
  if (j.contains("eps_max")) c.eps_max = read_field<double>(j, "eps_max");
  if (j.contains("key_dims")) c.key_dims = read_field<std::vector<int>>(j, "key_dims");
  if (j.contains("shield_dims")) c.shield_dims = read_field<std::vector<int>>(j, "shield_dims");
  if (j.contains("gap_shield_dims")) c.gap_shield_dims = read_field<std::vector<int>>(j, "gap_shield_dims");
  if (j.contains("gap_search_max")) c.gap_search_max = read_field<int>(j, "gap_search_max");
  if (j.contains("s_a")) c.s_a = read_field<double>(j, "s_a");
  if (j.contains("e_c")) c.e_c = read_field<double>(j, "e_c");
  c.validate();
  return c;
}

GridConfig GridConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadGrid, "cannot open grid config '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::BadGrid, "cannot parse grid config '" + path + "': " + e.what());
  }
  return from_json(j);
}

void GridConfig::validate() const {
  if (points < 2 || points > 100000) throw Error(ErrorCode::BadGrid, "points must be in [2, 100000]");
  if (!(eps_min > 0.0 && eps_min < eps_max && eps_max < 1.0)) {
    throw Error(ErrorCode::BadGrid, "need 0 < eps_min < eps_max < 1");
  }
  require_dims(key_dims, "key_dims");
  require_dims(shield_dims, "shield_dims");
  require_dims(gap_shield_dims, "gap_shield_dims");
  if (gap_search_max < 2) throw Error(ErrorCode::BadGrid, "gap_search_max must be >= 2");
  if (!(s_a > 0.0 && std::isfinite(s_a))) throw Error(ErrorCode::BadGrid, "s_a must be positive");
  if (!(e_c > 0.0 && std::isfinite(e_c))) throw Error(ErrorCode::BadGrid, "e_c must be positive");
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (points < 2 || !(lo > 0.0) || !(lo < hi)) throw Error(ErrorCode::BadGrid, "invalid log grid");
  const double a = std::log(lo);
  const double b = std::log(hi);
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) out[static_cast<std::size_t>(k)] = std::exp(a + (b - a) * k / (points - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

FigureSeries make_figure(int id, const GridConfig& c) {
  if (id < 4 || id > 13) throw Error(ErrorCode::UnknownFigure, "no figure " + std::to_string(id));
  c.validate();
  FigureSeries s;
  s.figure_id = id;
  const auto eps = log_grid(c.eps_min, c.eps_max, c.points);
  auto per_key_dim = [&](const std::function<BoundResult(double, double)>& f) {
    for (int dk : c.key_dims)
      for (double e : eps) add(s, e, std::to_string(dk), f(dk, e));
  };

  switch (id) {
    case 4:
      for (int dk : c.key_dims)
        for (double t : theta_grid(dk, c.points)) add(s, t, std::to_string(dk), thm1_overhead_fraction(dk, t));
      break;
    case 5:
      for (int k = 0; k < c.points; ++k) {
        const double x = static_cast<double>(k) / (c.points - 1);
        const auto chain = fig5_chain(c.s_a, x * c.s_a, c.e_c);
        add(s, x, "cost", chain.cost_line);
        add(s, x, "entropy", chain.entropy_line);
        add(s, x, "one_way", chain.one_way_line);
      }
      s.summary = Json{{"figure_id", 5},
                       {"x_unit", "E_D / S(A)"},
                       {"s_a", c.s_a},
                       {"e_c", c.e_c},
                       {"entropy_crossing_x", fig5_chain(c.s_a, 0.0, c.e_c).entropy_crossing / c.s_a},
                       {"cost_crossing_x", fig5_chain(c.s_a, 0.0, c.e_c).cost_crossing / c.s_a}};
      break;
    case 6:
      per_key_dim([](double dk, double e) { return thm3_overhead_fraction(dk, e); });
      break;
    case 7:
      per_key_dim([](double dk, double e) { return thm3_gap(dk, e); });
      break;
    case 8:
      for (int ds : c.shield_dims)
        for (double e : eps) add(s, e, std::to_string(ds), prop1_repeater_bound(e, ds));
      break;
    case 9:
      for (double e : eps) add(s, e, "fraction", thm4_overhead_fraction(e));
      break;
    case 10:
      for (int ds : c.gap_shield_dims)
        for (double e : eps) add(s, e, std::to_string(ds), thm4_gap(e, ds));
      s.summary = fig10_summary(c, eps);
      break;
    case 11:
      per_key_dim([](double dk, double e) {
        const auto ds = min_ds_for_eps(dk, e);
        auto r = prop2_repeater_bound(e, dk, ds.value);
        r.domain_ok = r.domain_ok && ds.domain_ok;
        return r;
      });
      break;
    case 12:
      per_key_dim([](double dk, double e) { return thm5_overhead_fraction(dk, e); });
      break;
    case 13:
      per_key_dim([](double dk, double e) {
        const auto ds = min_ds_for_eps(dk, e);
        auto r = thm5_gap(dk, ds.value, e);
        r.domain_ok = r.domain_ok && ds.domain_ok;
        return r;
      });
      break;
  }
  sort_rows(s);
  return s;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  return std::string(buf, r.ptr);
}

std::string to_csv(const FigureSeries& series) {
  std::string out = "x,label,y,domain_ok\n";
  for (const auto& row : series.rows) {
    out += format_number(row.x);
    out += ',';
    out += row.label;
    out += ',';
    out += format_number(row.y);
    out += ',';
    out += row.domain_ok ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::vector<std::string> write_figures(const std::vector<int>& ids, const GridConfig& config,
                                       const std::string& out_dir) {
  std::vector<FigureSeries> all;
  for (int id : ids) all.push_back(make_figure(id, config));
  std::filesystem::create_directories(out_dir);
  std::vector<std::string> written;
  auto emit = [&](const std::string& name, const std::string& text) {
    const auto path = (std::filesystem::path(out_dir) / name).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::BadGrid, "cannot write '" + path + "'");
    out << text;
    written.push_back(path);
  };
  for (const auto& s : all) {
    emit("fig" + std::to_string(s.figure_id) + ".csv", to_csv(s));
    if (s.figure_id == 10 && s.summary) emit("fig10_summary.json", s.summary->dump(2) + "\n");
  }
  return written;
}

}  // namespace privnet
