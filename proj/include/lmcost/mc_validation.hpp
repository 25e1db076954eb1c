#pragma once

// Monte Carlo estimate of the number of Location Area crossings between
// consecutive Poisson calls. One long timeline is simulated: crossings are
// renewal epochs with i.i.d. residence times, calls an independent Poisson
// stream. Used as the independent check of the analytic crossing model.
//
// Randomness comes from std::mt19937_64 (period 2^19937 - 1) seeded with the
// configured 64-bit seed. Uniform variates use the top 53 bits, shifted to the
// open interval (0, 1); exponential variates use the inverse transform. Output
// is a deterministic function of the configuration.

#include "lmcost/crossing_probs.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lmcost {

inline constexpr std::uint64_t kMinMcCalls = 10'000;

struct McConfig {
  ResidenceModel model;
  double lambda_p = 1.0;
  std::uint64_t n_calls = 1'000'000;
  std::uint64_t warmup_calls = 100;
  std::uint64_t seed = 42;
  int n_max = 10;

  void validate() const;
};

struct McEstimate {
  ResidenceModel model;
  double lambda_p = 1.0;
  std::vector<std::uint64_t> counts; ///< per N = 0..n_max
  std::uint64_t tail_count = 0;
  std::vector<double> freq;
  std::vector<double> std_error; ///< sqrt(p (1 - p) / n) per bin
  double tail_freq = 0.0;
  std::uint64_t n_calls_used = 0;

  int n_max() const { return static_cast<int>(freq.size()) - 1; }
  bool operator==(const McEstimate&) const = default;
};

McEstimate simulate_crossings(const McConfig& config);

struct EstimateComparison {
  std::vector<double> expected;         ///< analytic P(N), N = 0..n_max
  std::vector<std::optional<double>> z; ///< empty where the bin's std error is 0
  double max_abs_z = 0.0;
  double chi_square = 0.0;
  int bins_used = 0; ///< bins (tail included) with expected count >= 5
  int dof = 0;
  double p_value = 1.0;
};

/// Compares against the analytic crossing distribution. Throws
/// InvalidParameter when the estimate was produced for another model or rate.
EstimateComparison compare_estimates(const McEstimate& estimate, const ResidenceModel& model,
                                     const CallModel& call);

/// Compares against an arbitrary expected distribution over N = 0..n_max plus
/// the mass beyond n_max.
EstimateComparison compare_to(const McEstimate& estimate, std::span<const double> expected,
                              double expected_tail);

} // namespace lmcost
