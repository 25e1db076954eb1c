#include "lmcost/cost_model.hpp"

#include "lmcost/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace lmcost {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kKernelSeriesCutoff = 1.0;

void check_timeout(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("timeout must be finite and > 0, got " + std::to_string(t));
  }
}

double checked_positive(double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw NumericalFailure("cost is not a finite positive number: " + std::to_string(value));
  }
  return value;
}

} // namespace

void CostParams::validate() const {
  if (dimension != 1 && dimension != 2) throw InvalidParameter("dimension must be 1 or 2");
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(r)) throw InvalidParameter("mobility index r must be finite and > 0");
  if (!positive(p_page)) throw InvalidParameter("paging cost must be finite and > 0");
  if (!positive(lambda_p)) throw InvalidParameter("call rate must be finite and > 0");
}

double diffusion_kernel(double t) {
  if (t <= 0.0) return 0.0;
  if (t < kKernelSeriesCutoff) {
    // (2/sqrt(pi)) sum_{k>=1} (-1)^{k+1} 2k t^{k+1/2} / ((2k+1) k!)
    double term = t; // t^k / k! at k = 1
    double sum = 0.0;
    for (int k = 1; k < 60; ++k) {
      const double contribution = 2.0 * k / (2.0 * k + 1.0) * term;
      sum += (k % 2 == 1) ? contribution : -contribution;
      if (contribution < 1e-18 * sum) break;
      term *= t / (k + 1);
    }
    return 2.0 / std::sqrt(kPi) * std::sqrt(t) * sum;
  }
  return std::erf(std::sqrt(t)) - 2.0 * std::sqrt(t / kPi) * std::exp(-t);
}

double cost_1d(const CostParams& params, double t) {
  params.validate();
  if (params.dimension != 1) throw DomainError("cost_1d requires dimension 1");
  check_timeout(t);
  const double one_minus_decay = -std::expm1(-t);
  const double paging = std::sqrt(params.r) * params.p_page * diffusion_kernel(t);
  return checked_positive(params.lambda_p / one_minus_decay * (paging + std::exp(-t)));
}

double cost_2d(const CostParams& params, double t) {
  params.validate();
  if (params.dimension != 2) throw DomainError("cost_2d requires dimension 2");
  check_timeout(t);
  const double rpp = params.r * kPi * params.p_page;
  const double update_weight = 1.0 / std::expm1(t); // e^{-t} / (1 - e^{-t})
  return checked_positive(params.lambda_p * rpp + params.lambda_p * update_weight * (1.0 - rpp * t));
}

double cost(const CostParams& params, double t) {
  return params.dimension == 2 ? cost_2d(params, t) : cost_1d(params, t);
}

double stable_value(const CostParams& params) {
  params.validate();
  if (params.dimension == 1) return std::sqrt(params.r) * params.lambda_p * params.p_page;
  return params.lambda_p * params.r * params.p_page * kPi;
}

double mobility_index(double diffusion_constant, const CallModel& call) {
  if (!(diffusion_constant > 0.0) || !std::isfinite(diffusion_constant)) {
    throw DomainError("diffusion constant must be finite and > 0");
  }
  if (!(call.rate > 0.0) || !std::isfinite(call.rate)) {
    throw DomainError("call rate must be finite and > 0");
  }
  return diffusion_constant / call.rate;
}

Cmr cmr_of(const CostParams& params) {
  params.validate();
  return Cmr{1.0 / params.r};
}

double paging_resource_fraction(int dimension) {
  if (dimension < 0) throw InvalidParameter("movement dimension must be >= 0");
  return std::pow(1.0 / 3.0, dimension);
}

std::vector<double> log_grid(double t_start, double t_end, int steps) {
  if (!(t_start > 0.0) || !(t_end > t_start) || !std::isfinite(t_end)) {
    throw InvalidParameter("grid requires 0 < t_start < t_end");
  }
  if (steps < 2) throw InvalidParameter("grid requires at least 2 steps");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  const double log_start = std::log(t_start);
  const double log_step = (std::log(t_end) - log_start) / (steps - 1);
  for (int i = 0; i < steps; ++i) grid[static_cast<std::size_t>(i)] = std::exp(log_start + i * log_step);
  grid.front() = t_start;
  grid.back() = t_end;
  return grid;
}

CostCurve cost_curve(const CostParams& params, double t_start, double t_end, int steps) {
  params.validate();
  CostCurve curve;
  curve.params = params;
  curve.times = log_grid(t_start, t_end, steps);
  curve.values.reserve(curve.times.size());
  for (double t : curve.times) curve.values.push_back(cost(params, t));
  curve.sv = stable_value(params);
  return curve;
}

} // namespace lmcost
