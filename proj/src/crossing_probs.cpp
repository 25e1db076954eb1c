#include "lmcost/crossing_probs.hpp"

#include "lmcost/errors.hpp"

#include <cmath>
#include <string>

namespace lmcost {
namespace {

constexpr double kMinX = 1e-12;
constexpr double kMaxX = 1e6;
constexpr double kSeriesCutoff = 1e-4;

// (1 - e^{-y}) / y
double expm1_ratio(double y) {
  if (y < kSeriesCutoff) {
    return 1.0 - y / 2.0 + y * y / 6.0 - y * y * y / 24.0 + y * y * y * y / 120.0;
  }
  return -std::expm1(-y) / y;
}

// 1 - (1 - e^{-y}) / y
double one_minus_expm1_ratio(double y) {
  if (y < kSeriesCutoff) {
    return y / 2.0 - y * y / 6.0 + y * y * y / 24.0 - y * y * y * y / 120.0;
  }
  return 1.0 - expm1_ratio(y);
}

double checked_x(const ResidenceModel& model, const CallModel& call) {
  if (!std::isfinite(model.mean_residence) || model.mean_residence <= 0.0) {
    throw InvalidParameter("mean residence time must be finite and > 0");
  }
  if (!std::isfinite(call.rate) || call.rate <= 0.0) {
    throw InvalidParameter("call rate must be finite and > 0");
  }
  const double x = model.mean_residence * call.rate;
  if (x < kMinX || x > kMaxX) {
    throw InvalidParameter("rate * mean residence = " + std::to_string(x) +
                           " outside supported range [1e-12, 1e6]");
  }
  return x;
}

struct Transform {
  double lst;
  double one_minus_lst;
};

Transform transform(ResidenceKind kind, double x) {
  switch (kind) {
  case ResidenceKind::exponential:
    return {1.0 / (1.0 + x), x / (1.0 + x)};
  case ResidenceKind::constant:
    return {std::exp(-x), -std::expm1(-x)};
  case ResidenceKind::uniform:
    return {expm1_ratio(2.0 * x), one_minus_expm1_ratio(2.0 * x)};
  }
  throw InvalidParameter("unknown residence kind");
}

double p_zero(ResidenceKind kind, double x, const Transform& tr) {
  switch (kind) {
  case ResidenceKind::exponential:
    return x / (1.0 + x);
  case ResidenceKind::constant:
    return one_minus_expm1_ratio(x);
  case ResidenceKind::uniform:
    if (x < kSeriesCutoff) {
      return 2.0 * x / 3.0 - x * x / 3.0 + 2.0 * x * x * x / 15.0 - 2.0 * x * x * x * x / 45.0;
    }
    break;
  }
  return 1.0 - tr.one_minus_lst / x;
}

double p_n(double x, const Transform& tr, int n) {
  return tr.one_minus_lst * tr.one_minus_lst / x * std::pow(tr.lst, n - 1);
}

} // namespace

std::string_view to_string(ResidenceKind kind) {
  switch (kind) {
  case ResidenceKind::exponential: return "exp";
  case ResidenceKind::constant: return "const";
  case ResidenceKind::uniform: return "uniform";
  }
  return "?";
}

std::optional<ResidenceKind> parse_residence_kind(std::string_view name) {
  if (name == "exp" || name == "exponential") return ResidenceKind::exponential;
  if (name == "const" || name == "constant") return ResidenceKind::constant;
  if (name == "uniform") return ResidenceKind::uniform;
  return std::nullopt;
}

double lst_at_rate(const ResidenceModel& model, const CallModel& call) {
  return transform(model.kind, checked_x(model, call)).lst;
}

double crossing_probability(const ResidenceModel& model, const CallModel& call, int n) {
  const double x = checked_x(model, call);
  if (n < 0) throw InvalidParameter("crossing count must be >= 0");
  const Transform tr = transform(model.kind, x);
  return n == 0 ? p_zero(model.kind, x, tr) : p_n(x, tr, n);
}

CrossingDistribution crossing_distribution(const ResidenceModel& model, const CallModel& call,
                                           int n_max) {
  const double x = checked_x(model, call);
  if (n_max < 1) throw InvalidParameter("n_max must be >= 1");
  const Transform tr = transform(model.kind, x);

  CrossingDistribution dist;
  dist.n_max = n_max;
  dist.probs.reserve(static_cast<std::size_t>(n_max) + 1);
  dist.probs.push_back(p_zero(model.kind, x, tr));
  for (int n = 1; n <= n_max; ++n) dist.probs.push_back(p_n(x, tr, n));
  // sum_{N > n_max} c f^{N-1} = c f^{n_max} / (1 - f), with c = (1-f)^2 / x
  dist.tail_mass = tr.one_minus_lst / x * std::pow(tr.lst, n_max);
  return dist;
}

CrossingGap p0_p1_gap(const ResidenceModel& model, Cmr cmr) {
  if (!std::isfinite(cmr.value) || cmr.value <= 0.0) throw InvalidParameter("CMR must be > 0");
  const CallModel call{cmr.value / model.mean_residence};
  CrossingGap gap;
  gap.p0 = crossing_probability(model, call, 0);
  gap.p1 = crossing_probability(model, call, 1);
  gap.ratio = gap.p0 / gap.p1;
  return gap;
}

std::optional<Cmr> equal_crossing_cmr(const ResidenceModel& model) {
  constexpr double lo_bound = 1e-6;
  constexpr double hi_bound = 1e3;
  constexpr int scan_points = 2000;
  constexpr double tolerance = 1e-9;

  const ResidenceModel unit{model.kind, 1.0};
  auto diff = [&](double x) {
    const Transform tr = transform(unit.kind, x);
    return p_zero(unit.kind, x, tr) - p_n(x, tr, 1);
  };

  const double log_lo = std::log(lo_bound);
  const double log_step = (std::log(hi_bound) - log_lo) / (scan_points - 1);
  double a = lo_bound;
  double fa = diff(a);
  for (int i = 1; i < scan_points; ++i) {
    const double b = i == scan_points - 1 ? hi_bound : std::exp(log_lo + i * log_step);
    const double fb = diff(b);
    if (fa == 0.0) return Cmr{a};
    if ((fa < 0.0) != (fb < 0.0)) {
      double left = a;
      double right = b;
      double f_left = fa;
      while (right - left > tolerance) {
        const double mid = 0.5 * (left + right);
        const double f_mid = diff(mid);
        if ((f_mid < 0.0) == (f_left < 0.0)) {
          left = mid;
          f_left = f_mid;
        } else {
          right = mid;
        }
      }
      return Cmr{0.5 * (left + right)};
    }
    a = b;
    fa = fb;
  }
  return std::nullopt;
}

} // namespace lmcost
