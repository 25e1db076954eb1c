#pragma once

// Characterization of the valley that the timer-method cost curve shows
// before settling at its stable value: location and depth of the minimum,
// the rising crossing of a fraction of the stable value, and the settling
// time into a symmetric band around it.

#include "lmcost/cost_model.hpp"

#include <optional>

namespace lmcost {

inline constexpr double kDefaultSearchWindow = 50.0;
inline constexpr double kCrossingHorizon = 200.0;
inline constexpr double kDefaultSettleBand = 0.02;
/// depth / sv at or below this counts as "no valley".
inline constexpr double kValleyExistenceThreshold = 1e-9;

struct MinimumResult {
  double t = 0.0;
  double value = 0.0;
  /// The coarse-grid minimum sat on the right edge of the search window; `t`
  /// is then the window bound and `value` the cost there.
  bool censored = false;
};

struct ValleyProfile {
  double sv = 0.0;
  double t_min = 0.0;
  double minimum = 0.0;
  double depth = 0.0;
  double p_m = 0.0; ///< depth as a percentage of sv
  std::optional<double> t90;
  std::optional<double> t98;
  bool censored_t_min = false;
  bool has_valley = false;
};

struct WindowedMinimum {
  double t = 0.0;
  double value = 0.0;
  bool at_boundary = false;
};

/// Global minimum of the cost on (0, t_max]: log-grid bracketing then
/// golden-section refinement.
MinimumResult find_minimum(const CostParams& params, double t_max = kDefaultSearchWindow);

ValleyProfile characterize_valley(const CostParams& params, double t_max = kDefaultSearchWindow);

/// First t after the minimum where the cost climbs back to q * sv. Empty when
/// the minimum never dips below q * sv.
std::optional<double> rising_crossing(const CostParams& params, double level_fraction);

/// Smallest t after which the cost stays within sv * (1 +/- band_fraction) up
/// to the crossing horizon.
double settle_time(const CostParams& params, double band_fraction = kDefaultSettleBand);

/// Minimum over (0, window]; for curves still decreasing at the window edge
/// the boundary point is returned and flagged.
WindowedMinimum windowed_minimum(const CostParams& params, double window);

} // namespace lmcost
