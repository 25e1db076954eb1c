#include "lmcost/mc_validation.hpp"

#include "lmcost/errors.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>
#include <random>

namespace lmcost {
namespace {

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double open_uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double exponential(double mean) { return -mean * std::log(open_uniform()); }

  double residence(const ResidenceModel& model) {
    switch (model.kind) {
    case ResidenceKind::exponential: return exponential(model.mean_residence);
    case ResidenceKind::constant: return model.mean_residence;
    case ResidenceKind::uniform: return 2.0 * model.mean_residence * open_uniform();
    }
    return model.mean_residence;
  }

private:
  std::mt19937_64 engine_;
};

} // namespace

void McConfig::validate() const {
  if (!std::isfinite(model.mean_residence) || model.mean_residence <= 0.0) {
    throw InvalidParameter("mean residence time must be finite and > 0");
  }
  if (!std::isfinite(lambda_p) || lambda_p <= 0.0) throw InvalidParameter("call rate must be > 0");
  if (n_calls < kMinMcCalls) throw InvalidParameter("at least 10000 call intervals are required");
  if (n_max < 1) throw InvalidParameter("n_max must be >= 1");
}

McEstimate simulate_crossings(const McConfig& config) {
  config.validate();
  Sampler sampler(config.seed);

  McEstimate est;
  est.model = config.model;
  est.lambda_p = config.lambda_p;
  est.counts.assign(static_cast<std::size_t>(config.n_max) + 1, 0);

  const double call_mean = 1.0 / config.lambda_p;
  double call_time = 0.0;
  double next_crossing = sampler.residence(config.model);
  const std::uint64_t total = config.warmup_calls + config.n_calls;
  for (std::uint64_t i = 0; i < total; ++i) {
    const double next_call = call_time + sampler.exponential(call_mean);
    std::uint64_t crossings = 0;
    while (next_crossing <= next_call) {
      ++crossings;
      next_crossing += sampler.residence(config.model);
    }
    call_time = next_call;
    if (i < config.warmup_calls) continue;
    if (crossings <= static_cast<std::uint64_t>(config.n_max)) ++est.counts[crossings];
    else ++est.tail_count;
  }

  const double n = static_cast<double>(config.n_calls);
  est.n_calls_used = config.n_calls;
  est.freq.reserve(est.counts.size());
  est.std_error.reserve(est.counts.size());
  for (std::uint64_t c : est.counts) {
    const double p = static_cast<double>(c) / n;
    est.freq.push_back(p);
    est.std_error.push_back(std::sqrt(p * (1.0 - p) / n));
  }
  est.tail_freq = static_cast<double>(est.tail_count) / n;
  return est;
}

EstimateComparison compare_estimates(const McEstimate& estimate, const ResidenceModel& model,
                                     const CallModel& call) {
  if (!(estimate.model == model) || estimate.lambda_p != call.rate) {
    throw InvalidParameter("estimate was produced for a different model or call rate");
  }
  const CrossingDistribution dist = crossing_distribution(model, call, estimate.n_max());
  return compare_to(estimate, dist.probs, dist.tail_mass);
}

EstimateComparison compare_to(const McEstimate& estimate, std::span<const double> expected,
                              double expected_tail) {
  if (expected.size() != estimate.freq.size()) {
    throw InvalidParameter("expected distribution does not match the estimate's bins");
  }
  constexpr double min_expected_count = 5.0;
  const double n = static_cast<double>(estimate.n_calls_used);

  EstimateComparison out;
  out.expected.assign(expected.begin(), expected.end());
  out.z.reserve(expected.size());

  auto add_bin = [&](double observed_count, double p) {
    const double expected_count = n * p;
    if (expected_count < min_expected_count) return;
    const double diff = observed_count - expected_count;
    out.chi_square += diff * diff / expected_count;
    ++out.bins_used;
  };

  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (estimate.std_error[i] > 0.0) {
      const double z = (estimate.freq[i] - expected[i]) / estimate.std_error[i];
      out.z.emplace_back(z);
      out.max_abs_z = std::max(out.max_abs_z, std::abs(z));
    } else {
      out.z.emplace_back(std::nullopt);
    }
    add_bin(static_cast<double>(estimate.counts[i]), expected[i]);
  }
  add_bin(static_cast<double>(estimate.tail_count), expected_tail);

  out.dof = std::max(out.bins_used - 1, 1);
  const boost::math::chi_squared chi(out.dof);
  out.p_value = boost::math::cdf(boost::math::complement(chi, out.chi_square));
  return out;
}

} // namespace lmcost
