#pragma once

// Mean Location Management cost rate of the timer-based update policy as a
// function of the timeout t, for one- and two-dimensional movement. Update
// cost is normalized to 1; paging one Location Area costs p_page. The timeout
// is dimensionless (time in units of 1 / lambda_p).

#include "lmcost/crossing_probs.hpp"

#include <vector>

namespace lmcost {

struct CostParams {
  int dimension = 1;     ///< 1 or 2
  double r = 1.0;        ///< mobility index, diffusion constant / call rate
  double p_page = 0.1;   ///< paging cost per Location Area
  double lambda_p = 1.0; ///< call arrival rate

  /// Throws InvalidParameter unless every field is finite and in range.
  void validate() const;
};

struct CostCurve {
  CostParams params;
  std::vector<double> times;
  std::vector<double> values;
  double sv = 0.0;
};

/// Regularized lower incomplete gamma P(3/2, t) = erf(sqrt t) - 2 sqrt(t/pi) e^{-t}.
/// Nonnegative and increasing from 0 to 1.
double diffusion_kernel(double t);

double cost_1d(const CostParams& params, double t);
double cost_2d(const CostParams& params, double t);
/// Dispatches on params.dimension.
double cost(const CostParams& params, double t);

/// Limit of the cost rate as t -> infinity.
double stable_value(const CostParams& params);

double mobility_index(double diffusion_constant, const CallModel& call);

/// 1 / r: calls per mobility event in the diffusion model.
Cmr cmr_of(const CostParams& params);

/// Fraction (1/3)^n of a Location Area's resources used for paging in n dimensions.
double paging_resource_fraction(int dimension);

/// Logarithmically spaced timeouts over [t_start, t_end], `steps` points.
std::vector<double> log_grid(double t_start, double t_end, int steps);

CostCurve cost_curve(const CostParams& params, double t_start, double t_end, int steps);

} // namespace lmcost
