#pragma once

// Two-dimensional versus one-dimensional comparisons of the timer-method
// cost: ratios of (optionally windowed) minima, the stable-value ratio and the
// table sweeps built on them.

#include "lmcost/reference_tables.hpp"
#include "lmcost/valley_analysis.hpp"

#include <optional>
#include <span>
#include <vector>

namespace lmcost {

struct RatioRow {
  double r = 0.0;
  double p_page = 0.0;
  double min_1d = 0.0;
  double min_2d = 0.0;
  double ratio = 0.0; ///< min_2d / min_1d
  std::optional<double> window;
  bool boundary_1d = false; ///< minimum sits at the window edge
  bool boundary_2d = false;
};

RatioRow minima_ratio(double r, double p_page, double lambda_p = 1.0);
RatioRow windowed_minima_ratio(double r, double p_page, double lambda_p, double window);

/// Ratio of the 2D to the 1D stable value, pi * sqrt(r); equals 1 at r = 1/pi^2.
double sv_ratio(double r);

// Sweeps over explicit grids. Rows come back in grid order (r outer, p inner).
std::vector<ValleyProfile> sweep_valleys(int dimension, double p_page, std::span<const double> rs,
                                         double lambda_p = 1.0);
std::vector<RatioRow> sweep_ratios(std::span<const double> rs, std::span<const double> ps,
                                   std::optional<double> window = std::nullopt,
                                   double lambda_p = 1.0);

// Reproductions of the published tables, paired with the published values.

struct ValleyTableRow {
  ValleyProfile computed;
  reference::ValleyRow published;
};
struct ValleyTable {
  reference::ValleyTableInfo info;
  std::vector<ValleyTableRow> rows;
};
ValleyTable valley_table(int id); // 1..6

struct SettleTableRow {
  double t98 = 0.0;
  reference::SettleCell published;
};
std::vector<SettleTableRow> settle_table(); // 7

struct TminTableRow {
  MinimumResult computed;
  reference::TminCell published;
};
std::vector<TminTableRow> tmin_table(); // 8

struct RatioGridRow {
  RatioRow unwindowed;
  RatioRow windowed; ///< window of 10 time units
  double published = 0.0;
};
std::vector<RatioGridRow> ratio_grid_table(); // 9

struct RatioBlockTableRow {
  RatioRow computed;
  double published_min_2d = 0.0;
  double published_min_1d = 0.0;
  double published_ratio = 0.0;
};
/// Tables 10 and 11, ordered by P block (0.1 then 0.3), then by r.
std::vector<RatioBlockTableRow> ratio_block_table(int id);

/// Valid table ids are 1..11.
bool is_table_id(int id);

} // namespace lmcost
