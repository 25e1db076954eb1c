#pragma once

// Published measurements for the timer-based method, kept verbatim so that
// computed tables can be diffed against them. Values carry the precision (and
// the rounding) of the original print.

#include <array>
#include <optional>
#include <span>

namespace lmcost::reference {

struct ValleyRow {
  double r;
  double sv;
  double minimum;
  double depth;
  double p_m;
  std::optional<double> t90; ///< empty where "-" was printed
};

struct ValleyTableInfo {
  int id;
  /// Paging cost the values are consistent with. Table 4 is captioned P = 0.1
  /// but every column matches P = 0.9.
  double p_page;
  bool caption_anomaly;
  std::span<const ValleyRow> rows;
};

/// Tables 1..6.
ValleyTableInfo valley_table(int id);

struct SettleCell {
  double p_page;
  int dimension;
  double r;
  double t98;
};
std::span<const SettleCell> settle_cells(); // Table 7

struct TminCell {
  double p_page;
  int dimension;
  double r;
  std::optional<double> t_min; ///< empty for the ">10" entry
};
std::span<const TminCell> tmin_cells(); // Table 8
inline constexpr double kTminTableWindow = 10.0;

inline constexpr std::array<double, 5> kRatioGridP{0.1, 0.3, 0.5, 0.7, 0.9};
inline constexpr std::array<double, 6> kRatioGridR{1.4, 5.0, 8.0, 14.0, 1400.0, 14000.0};
/// Table 9, rows follow kRatioGridR and columns kRatioGridP.
const std::array<std::array<double, 5>, 6>& ratio_grid();

struct RatioBlockRow {
  double r;
  double min2d_p01, min1d_p01, ratio_p01;
  double min2d_p03, min1d_p03, ratio_p03;
};
/// Tables 10 (unwindowed, r > 500) and 11 (window of 10 time units, r < 1).
std::span<const RatioBlockRow> ratio_block(int id);
inline constexpr double kRatioBlockWindow = 10.0;

} // namespace lmcost::reference
