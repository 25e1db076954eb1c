#include "lmcost/cost_model.hpp"
#include "lmcost/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace lmcost;

namespace {

CostParams make(int dim, double r, double p) {
  CostParams params;
  params.dimension = dim;
  params.r = r;
  params.p_page = p;
  return params;
}

// Simpson quadrature of the P(3/2, t) density after s = u^2, independent of erf.
double kernel_by_quadrature(double t) {
  const int n = 20000;
  const double b = std::sqrt(t);
  const double h = b / n;
  auto density = [](double u) { return 4.0 / std::sqrt(std::numbers::pi) * u * u * std::exp(-u * u); };
  double sum = density(0.0) + density(b);
  for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * density(i * h);
  return sum * h / 3.0;
}

} // namespace

TEST_CASE("std::erf against 20-digit references") {
  const double refs[][2] = {
      {0.0, 0.0},
      {0.001, 0.001128378790969236403438},
      {0.01, 0.01128341555584961715078},
      {0.05, 0.05637197779701662695533},
      {0.1, 0.1124629160182848984047},
      {0.25, 0.2763263901682369329851},
      {0.5, 0.5204998778130465376827},
      {0.75, 0.7111556336535151315989},
      {1.0, 0.8427007929497148693412},
      {1.25, 0.9229001282564582301365},
      {1.5, 0.966105146475310727067},
      {2.0, 0.9953222650189527341621},
      {2.5, 0.9995930479825550410604},
      {3.0, 0.9999779095030014145586},
      {3.5, 0.9999992569016276585873},
      {4.0, 0.99999998458274209972},
      {4.5, 0.9999999998033839558457},
      {5.0, 0.9999999999984625402056},
      {5.5, 0.9999999999999926421521},
      {6.0, 0.9999999999999999784803},
  };
  for (const auto& ref : refs) {
    CAPTURE(ref[0]);
    CHECK(std::abs(std::erf(ref[0]) - ref[1]) <= 1e-14);
  }
}

TEST_CASE("diffusion_kernel") {
  const double refs[][2] = {
      {1e-06, 7.5225232671216935698e-10}, {0.001, 0.000023774053651950565013},
      {0.01, 0.00074775533939119791237},  {0.1, 0.022410702238350602286},
      {0.5, 0.19874804309879919757},      {0.99, 0.42343186044640390234},
      {1.0, 0.427593295529120166},        {1.01, 0.43173397579910826153},
      {2, 0.7385358700508893778},         {5, 0.9814338645369567667},
      {10, 0.99983025756444717357},       {30, 0.99999999999941217693},
  };
  for (const auto& ref : refs) {
    CAPTURE(ref[0]);
    CHECK(diffusion_kernel(ref[0]) == doctest::Approx(ref[1]).epsilon(1e-13));
  }
  SUBCASE("matches quadrature of its density") {
    for (double t : {0.2, 0.9, 1.7, 4.0}) CHECK(diffusion_kernel(t) == doctest::Approx(kernel_by_quadrature(t)).epsilon(1e-9));
  }
  SUBCASE("monotone in [0, 1]") {
    double previous = 0.0;
    for (double t = 1e-8; t < 60.0; t *= 1.05) {
      const double k = diffusion_kernel(t);
      CHECK(k >= previous);
      CHECK(k <= 1.0);
      previous = k;
    }
  }
}

TEST_CASE("cost rates against 40-digit references") {
  struct Ref {
    double r, p, t, eta1, eta2;
  };
  const Ref refs[] = {
      {1000, 0.1, 0.5, 3.1388142097784749966, 73.563435179028932199},
      {1000, 0.1, 2.0, 2.8575131128054128873, 215.97284767782072601},
      {14, 0.5, 1e-3, 999.54458275735941089, 999.51107707502380385},
      {0.14, 0.1, 3.0, 0.087377857362285601562, 0.089464544364093754287},
      {50000, 0.9, 0.15, 63.929153412258774939, 10344.081836434534017},
      {1.4, 0.3, 40, 0.35496478698597693302, 1.3194689145077128076},
  };
  for (const Ref& ref : refs) {
    CAPTURE(ref.r);
    CAPTURE(ref.t);
    CHECK(cost_1d(make(1, ref.r, ref.p), ref.t) == doctest::Approx(ref.eta1).epsilon(1e-12));
    CHECK(cost_2d(make(2, ref.r, ref.p), ref.t) == doctest::Approx(ref.eta2).epsilon(1e-12));
    CHECK(cost(make(2, ref.r, ref.p), ref.t) == cost_2d(make(2, ref.r, ref.p), ref.t));
  }
}

TEST_CASE("cost scales linearly with the call rate") {
  CostParams params = make(1, 200.0, 0.2);
  const double base = cost(params, 1.3);
  params.lambda_p = 3.0;
  CHECK(cost(params, 1.3) == doctest::Approx(3.0 * base).epsilon(1e-14));
}

TEST_CASE("stable values") {
  CHECK(stable_value(make(1, 100.0, 0.1)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(stable_value(make(2, 1.0, 0.1)) == doctest::Approx(0.1 * std::numbers::pi).epsilon(1e-15));
  SUBCASE("large-t limit property") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> log_r(std::log(0.01), std::log(1e5));
    std::uniform_real_distribution<double> page(0.01, 0.99);
    for (int trial = 0; trial < 200; ++trial) {
      const CostParams params = make(1 + trial % 2, std::exp(log_r(rng)), page(rng));
      const double sv = stable_value(params);
      CHECK(std::abs(cost(params, 100.0) - sv) <= 1e-6 * sv);
    }
  }
  SUBCASE("ratio of stable values is pi sqrt r") {
    for (double r : {0.14, 1.0, 14.0, 1400.0})
      CHECK(stable_value(make(2, r, 0.3)) / stable_value(make(1, r, 0.3)) ==
            doctest::Approx(std::numbers::pi * std::sqrt(r)).epsilon(1e-14));
  }
}

TEST_CASE("small-t divergence") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> page(0.05, 0.95);
  std::uniform_real_distribution<double> sv_draw(1.0, 9.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 1 + trial % 2;
    const double p = page(rng);
    const double sv = sv_draw(rng);
    // choose r so the stable value lands on sv
    const double r = dim == 1 ? (sv / p) * (sv / p) : sv / (p * std::numbers::pi);
    const CostParams params = make(dim, r, p);
    CHECK(cost(params, 1e-3) > 100.0 * stable_value(params));
  }
}

TEST_CASE("scaling invariances") {
  for (double k : {0.5, 2.0, 10.0}) {
    for (double t = 1e-3; t < 50.0; t *= 1.3) {
      const double a1 = cost(make(1, 300.0, 0.4), t);
      CHECK(cost(make(1, 300.0 * k * k, 0.4 / k), t) == doctest::Approx(a1).epsilon(1e-12));
      const double a2 = cost(make(2, 300.0, 0.4), t);
      CHECK(cost(make(2, 300.0 * k, 0.4 / k), t) == doctest::Approx(a2).epsilon(1e-12));
    }
  }
}

TEST_CASE("two-dimensional cost dominates the one-dimensional cost") {
  for (double r : {1.4, 2.0, 4.0, 6.0, 8.0, 14.0}) {
    for (double t = 0.01; t <= 10.0; t *= 1.02) {
      const double one = cost(make(1, r, 0.1), t);
      const double two = cost(make(2, r, 0.1), t);
      CAPTURE(r);
      CAPTURE(t);
      if (t >= 0.2) CHECK(two >= one);
      CHECK(two >= one * (1.0 - 1e-3));
    }
  }
  for (double t = 0.01; t <= 10.0; t *= 1.02) CHECK(cost(make(2, 1400.0, 0.1), t) > cost(make(1, 1400.0, 0.1), t));
}

TEST_CASE("cost is positive and finite over the parameter box") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> log_r(std::log(0.01), std::log(1e5));
  std::uniform_real_distribution<double> page(0.001, 1.0);
  std::uniform_real_distribution<double> log_t(std::log(1e-6), std::log(200.0));
  for (int trial = 0; trial < 2000; ++trial) {
    const CostParams params = make(1 + trial % 2, std::exp(log_r(rng)), page(rng));
    const double value = cost(params, std::exp(log_t(rng)));
    CHECK(std::isfinite(value));
    CHECK(value > 0.0);
  }
}

TEST_CASE("mobility index and helpers") {
  CHECK(mobility_index(5.0, CallModel{0.5}) == doctest::Approx(10.0));
  CHECK_THROWS_AS(mobility_index(5.0, CallModel{0.0}), DomainError);
  CHECK(cmr_of(make(1, 4.0, 0.1)).value == doctest::Approx(0.25));
  CHECK(paging_resource_fraction(1) == doctest::Approx(1.0 / 3.0));
  CHECK(paging_resource_fraction(2) == doctest::Approx(1.0 / 9.0));
  CHECK_THROWS(paging_resource_fraction(-1));

  const std::vector<double> grid = log_grid(0.01, 10.0, 4);
  REQUIRE(grid.size() == 4);
  CHECK(grid.front() == doctest::Approx(0.01));
  CHECK(grid[1] == doctest::Approx(0.1));
  CHECK(grid.back() == doctest::Approx(10.0));

  const CostCurve curve = cost_curve(make(2, 14.0, 0.1), 0.01, 10.0, 50);
  CHECK(curve.times.size() == 50);
  CHECK(curve.values.size() == 50);
  CHECK(curve.sv == doctest::Approx(stable_value(make(2, 14.0, 0.1))));
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(cost(make(1, 1.0, 0.1), 0.0), DomainError);
  CHECK_THROWS_AS(cost(make(1, 1.0, 0.1), -1.0), DomainError);
  CHECK_THROWS_AS(cost_1d(make(2, 1.0, 0.1), 1.0), DomainError);
  CHECK_THROWS_AS(cost(make(3, 1.0, 0.1), 1.0), InvalidParameter);
  CHECK_THROWS_AS(cost(make(1, -1.0, 0.1), 1.0), InvalidParameter);
  CHECK_THROWS_AS(cost(make(1, 1.0, std::numeric_limits<double>::quiet_NaN()), 1.0), InvalidParameter);
  CHECK_THROWS_AS(cost(make(1, 1.0, 0.1), 1e-320), NumericalFailure);
}
