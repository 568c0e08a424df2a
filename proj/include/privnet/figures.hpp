#pragma once

// Figure data for ids 4..13 as (x, label, y, domain_ok) rows, evaluated
// straight from the bounds module on configurable grids.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace privnet {

struct GridConfig {
  int points = 200;
  double eps_min = 1e-4;
  double eps_max = 0.45;
  std::vector<int> key_dims{2, 4, 8, 16};              // figs 4, 6, 7, 11, 12, 13
  std::vector<int> shield_dims{2, 4, 8, 16, 32};       // fig 8
  std::vector<int> gap_shield_dims{2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};  // fig 10
  int gap_search_max = 1 << 16;  // fig 10 summary: largest d_s scanned for a positive gap
  double s_a = 1.0;              // fig 5
  double e_c = 1.0;              // fig 5

  /// Throws BadGrid on unknown keys, wrong types or out-of-range values.
  static GridConfig from_json(const nlohmann::ordered_json& j);
  static GridConfig load(const std::string& path);
  void validate() const;
};

struct FigureRow {
  double x = 0.0;
  std::string label;
  double y = 0.0;
  bool domain_ok = true;
};

struct FigureSeries {
  int figure_id = 0;
  std::vector<FigureRow> rows;  // sorted by (label, x)
  std::optional<nlohmann::ordered_json> summary;
};

/// Log-spaced grid of `points` values from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int points);

/// Throws UnknownFigure outside 4..13.
FigureSeries make_figure(int id, const GridConfig& config = {});

/// Locale-independent shortest form with 12 significant digits.
std::string format_number(double x);

std::string to_csv(const FigureSeries& series);

/// Writes fig<id>.csv (plus fig10_summary.json for id 10) into out_dir and
/// returns the written paths.
std::vector<std::string> write_figures(const std::vector<int>& ids, const GridConfig& config,
                                       const std::string& out_dir);

}  // namespace privnet
