#pragma once

// Probabilities that a terminal crosses N Location Areas between two
// consecutive Poisson calls, for exponential, constant and uniform residence
// times. Crossings form a renewal process observed at call epochs, so the
// distribution is geometric for N >= 1 with ratio equal to the residence-time
// Laplace-Stieltjes transform evaluated at the call rate.

#include <optional>
#include <string_view>
#include <vector>

namespace lmcost {

enum class ResidenceKind { exponential, constant, uniform };

std::string_view to_string(ResidenceKind kind);
/// Accepts "exp"/"exponential", "const"/"constant", "uniform".
std::optional<ResidenceKind> parse_residence_kind(std::string_view name);

/// Residence time in a Location Area. For `uniform` the support is [0, 2*mean].
struct ResidenceModel {
  ResidenceKind kind = ResidenceKind::exponential;
  double mean_residence = 1.0;

  bool operator==(const ResidenceModel&) const = default;
};

struct CallModel {
  double rate = 1.0; ///< Poisson call-arrival rate.

  bool operator==(const CallModel&) const = default;
};

/// Call-to-mobility ratio, rate * mean_residence.
struct Cmr {
  double value = 1.0;
};

struct CrossingDistribution {
  std::vector<double> probs; ///< P(N) for N = 0..n_max
  double tail_mass = 0.0;    ///< analytic mass for N > n_max
  int n_max = 0;
};

struct CrossingGap {
  double p0 = 0.0;
  double p1 = 0.0;
  double ratio = 0.0; ///< p0 / p1
};

inline constexpr int kDefaultCrossingNMax = 50;

/// f*(rate): the residence-time LST at the call rate.
double lst_at_rate(const ResidenceModel& model, const CallModel& call);

double crossing_probability(const ResidenceModel& model, const CallModel& call, int n);

CrossingDistribution crossing_distribution(const ResidenceModel& model, const CallModel& call,
                                           int n_max = kDefaultCrossingNMax);

/// P(0) versus P(1) at the given CMR; the call rate is cmr / mean_residence.
CrossingGap p0_p1_gap(const ResidenceModel& model, Cmr cmr);

/// CMR at which P(0) = P(1), searched over (1e-6, 1e3). Empty when there is no
/// sign change in that range (the exponential model never has one).
std::optional<Cmr> equal_crossing_cmr(const ResidenceModel& model);

} // namespace lmcost
