#include "lmcost/valley_analysis.hpp"

#include "lmcost/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace lmcost {
namespace {

constexpr int kCoarsePoints = 4000;
constexpr double kCoarseSpan = 1e-8; // left edge of the coarse grid, relative to t_max
constexpr int kMaxRefineIterations = 200;
constexpr double kTieTolerance = 1e-12;
constexpr double kSettleStep = 0.005;
constexpr double kRootTolerance = 1e-10;

void check_fraction(double value, const char* what) {
  if (!(value > 0.0 && value < 1.0)) {
    throw InvalidParameter(std::string(what) + " must lie in (0, 1)");
  }
}

std::optional<double> rising_crossing_after(const CostParams& params, double sv,
                                            const MinimumResult& minimum, double q) {
  const double level = q * sv;
  if (!(minimum.value < level)) return std::nullopt;

  double lo = minimum.t;
  double hi = kCrossingHorizon;
  if (cost(params, hi) < level) {
    throw NumericalFailure("cost does not climb back to the requested level before t = 200");
  }
  while (hi - lo > kRootTolerance * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (cost(params, mid) < level) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace

MinimumResult find_minimum(const CostParams& params, double t_max) {
  params.validate();
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw InvalidParameter("search bound must be > 0");

  const std::vector<double> grid = log_grid(t_max * kCoarseSpan, t_max, kCoarsePoints);
  std::vector<double> values(grid.size());
  std::transform(grid.begin(), grid.end(), values.begin(), [&](double t) { return cost(params, t); });

  const double lowest = *std::min_element(values.begin(), values.end());
  // Earliest point within tie tolerance of the lowest value.
  std::size_t best = 0;
  while (values[best] > lowest * (1.0 + kTieTolerance)) ++best;

  if (best + 1 == grid.size()) return {t_max, values.back(), true};

  double a = grid[best == 0 ? 0 : best - 1];
  double b = grid[best + 1];
  constexpr double inv_phi = 0.6180339887498949;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = cost(params, c);
  double fd = cost(params, d);
  int iterations = 0;
  while (b - a > 1e-9 * std::min(1.0, b)) {
    if (++iterations > kMaxRefineIterations) {
      throw NumericalFailure("golden-section refinement did not converge");
    }
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = cost(params, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = cost(params, d);
    }
  }
  const double t = 0.5 * (a + b);
  const double value = cost(params, t);
  if (value > values[best]) return {grid[best], values[best], false};
  return {t, value, false};
}

ValleyProfile characterize_valley(const CostParams& params, double t_max) {
  ValleyProfile profile;
  profile.sv = stable_value(params);
  const MinimumResult minimum = find_minimum(params, t_max);
  profile.t_min = minimum.t;
  profile.minimum = minimum.value;
  profile.censored_t_min = minimum.censored;

  const double depth = profile.sv - minimum.value;
  profile.has_valley = depth / profile.sv > kValleyExistenceThreshold;
  profile.depth = profile.has_valley ? depth : 0.0;
  profile.p_m = profile.depth / profile.sv * 100.0;
  profile.t90 = rising_crossing_after(params, profile.sv, minimum, 0.9);
  profile.t98 = settle_time(params, kDefaultSettleBand);
  return profile;
}

std::optional<double> rising_crossing(const CostParams& params, double level_fraction) {
  check_fraction(level_fraction, "level fraction");
  return rising_crossing_after(params, stable_value(params), find_minimum(params), level_fraction);
}

double settle_time(const CostParams& params, double band_fraction) {
  check_fraction(band_fraction, "band fraction");
  const double sv = stable_value(params);
  const double band = band_fraction * sv;
  auto outside = [&](double t) { return std::abs(cost(params, t) - sv) > band; };

  const int samples = static_cast<int>(std::lround(kCrossingHorizon / kSettleStep));
  int last_outside = -1;
  for (int i = 1; i <= samples; ++i) {
    if (outside(i * kSettleStep)) last_outside = i;
  }
  if (last_outside == samples) {
    throw NumericalFailure("cost never settles into the band before t = 200");
  }
  if (last_outside < 0) return kSettleStep;

  double lo = last_outside * kSettleStep;
  double hi = lo + kSettleStep;
  while (hi - lo > kRootTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (outside(mid)) lo = mid;
    else hi = mid;
  }
  return hi;
}

WindowedMinimum windowed_minimum(const CostParams& params, double window) {
  const MinimumResult minimum = find_minimum(params, window);
  return {minimum.t, minimum.value, minimum.censored};
}

} // namespace lmcost
