#include "lmcost/crossing_probs.hpp"
#include "lmcost/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numeric>
#include <random>

using namespace lmcost;

namespace {

constexpr ResidenceKind kAllKinds[] = {ResidenceKind::exponential, ResidenceKind::constant,
                                       ResidenceKind::uniform};

ResidenceModel unit_model(ResidenceKind kind) { return {kind, 1.0}; }
CallModel rate(double x) { return CallModel{x}; }

} // namespace

TEST_CASE("lst_at_rate closed forms") {
  CHECK(lst_at_rate(unit_model(ResidenceKind::exponential), rate(1.0)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(lst_at_rate(unit_model(ResidenceKind::constant), rate(0.7)) ==
        doctest::Approx(0.49658530379140951).epsilon(1e-14));
  CHECK(lst_at_rate(unit_model(ResidenceKind::uniform), rate(1e-10)) == doctest::Approx(1.0).epsilon(1e-9));
  // mean residence and rate enter only through their product
  CHECK(lst_at_rate({ResidenceKind::uniform, 4.0}, rate(0.25)) ==
        lst_at_rate(unit_model(ResidenceKind::uniform), rate(1.0)));
}

TEST_CASE("lst_at_rate is strictly decreasing and inside (0, 1)") {
  for (ResidenceKind kind : kAllKinds) {
    double previous = 1.0;
    for (double x = 1e-6; x < 500.0; x *= 1.5) {
      const double f = lst_at_rate(unit_model(kind), rate(x));
      CHECK(f > 0.0);
      CHECK(f < previous);
      previous = f;
    }
  }
}

TEST_CASE("crossing_probability examples") {
  CHECK(crossing_probability(unit_model(ResidenceKind::exponential), rate(1.0), 2) ==
        doctest::Approx(0.125).epsilon(1e-15));
  CHECK(crossing_probability(unit_model(ResidenceKind::constant), rate(1e6), 0) ==
        doctest::Approx(1.0).epsilon(1e-5));
  // corrected uniform formula, 40-digit evaluation
  CHECK(crossing_probability(unit_model(ResidenceKind::uniform), rate(0.7), 0) ==
        doctest::Approx(0.340207179651).epsilon(1e-11));
  CHECK(crossing_probability(unit_model(ResidenceKind::uniform), rate(0.7), 1) ==
        doctest::Approx(0.304728596048).epsilon(1e-11));
}

TEST_CASE("small-x branches match high-precision values") {
  struct Ref {
    ResidenceKind kind;
    double x, lst, p0, p1;
  };
  const Ref refs[] = {
      {ResidenceKind::constant, 5e-5, 0.99995000124997916693, 2.4999583338541614584e-5, 4.9997500072915104194e-5},
      {ResidenceKind::constant, 9.9e-5, 0.9999010049003382875, 4.9498366540428324517e-5, 9.8990199565983735919e-5},
      {ResidenceKind::constant, 1.01e-4, 0.9998990051003282875, 5.0498299876261674511e-5, 1.0098979960098290247e-4},
      {ResidenceKind::constant, 1e-8, 0.99999999000000005, 4.999999983333333375e-9, 9.9999999000000005833e-9},
      {ResidenceKind::uniform, 5e-5, 0.99995000166662500083, 3.3332500016666388893e-5, 4.9996666805551111229e-5},
      {ResidenceKind::uniform, 9.9e-5, 0.99990100653367657981, 6.5996733129368930805e-5, 9.8986933078041694543e-5},
      {ResidenceKind::uniform, 1.01e-4, 0.99989900680032324687, 6.7329933137368841893e-5, 1.0098639981137156102e-4},
      {ResidenceKind::uniform, 1e-8, 0.99999999000000006667, 6.6666666333333334868e-9, 9.9999998666666677778e-9},
      {ResidenceKind::exponential, 5e-5, 0.99995000249987500625, 4.9997500124993750312e-5, 4.9995000374975001562e-5},
      {ResidenceKind::exponential, 1e-8, 0.9999999900000001, 9.999999900000001e-9, 9.999999800000003e-9},
  };
  for (const Ref& ref : refs) {
    CAPTURE(to_string(ref.kind));
    CAPTURE(ref.x);
    CHECK(lst_at_rate(unit_model(ref.kind), rate(ref.x)) == doctest::Approx(ref.lst).epsilon(1e-14));
    CHECK(crossing_probability(unit_model(ref.kind), rate(ref.x), 0) == doctest::Approx(ref.p0).epsilon(1e-11));
    // P(1) carries (1 - f)^2 / x, so x >= 1e-4 inherits the rounding of 1 - f
    CHECK(crossing_probability(unit_model(ref.kind), rate(ref.x), 1) == doctest::Approx(ref.p1).epsilon(1e-9));
  }
}

TEST_CASE("crossing_distribution examples") {
  const CrossingDistribution d = crossing_distribution(unit_model(ResidenceKind::exponential), rate(1.0), 3);
  REQUIRE(d.probs.size() == 4);
  CHECK(d.n_max == 3);
  CHECK(d.probs[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(d.probs[1] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(d.probs[2] == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(d.probs[3] == doctest::Approx(0.0625).epsilon(1e-15));
  CHECK(d.tail_mass == doctest::Approx(0.0625).epsilon(1e-15));

  const CrossingDistribution low = crossing_distribution(unit_model(ResidenceKind::exponential), rate(0.1));
  CHECK(low.n_max == kDefaultCrossingNMax);
  CHECK(low.probs[0] == doctest::Approx(1.0 / 11.0).epsilon(1e-14));
  // slow decay: successive ratios 1/1.1
  CHECK(low.probs[10] / low.probs[9] == doctest::Approx(1.0 / 1.1).epsilon(1e-12));
}

TEST_CASE("normalization with the analytic tail") {
  for (ResidenceKind kind : kAllKinds) {
    for (double x : {0.01, 0.1, 0.7, 1.0, 2.0, 5.0, 50.0}) {
      for (int n_max : {1, 5, 50}) {
        const CrossingDistribution d = crossing_distribution(unit_model(kind), rate(x), n_max);
        const double total = std::accumulate(d.probs.begin(), d.probs.end(), d.tail_mass);
        CAPTURE(x);
        CHECK(std::abs(total - 1.0) <= 1e-12);
      }
    }
  }
}

TEST_CASE("geometric tail ratio equals the LST") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> log_x(std::log(1e-3), std::log(1e3));
  for (int trial = 0; trial < 300; ++trial) {
    const ResidenceKind kind = kAllKinds[trial % 3];
    const double x = std::exp(log_x(rng));
    const CrossingDistribution d = crossing_distribution(unit_model(kind), rate(x), 20);
    const double f = lst_at_rate(unit_model(kind), rate(x));
    for (int n = 1; n < 20; ++n) {
      if (d.probs[static_cast<std::size_t>(n)] < 1e-290) break;
      CHECK(std::abs(d.probs[static_cast<std::size_t>(n) + 1] / d.probs[static_cast<std::size_t>(n)] - f) <= 1e-10);
    }
  }
}

TEST_CASE("probabilities stay in [0, 1] over a 10^3-point grid") {
  int checked = 0;
  for (ResidenceKind kind : kAllKinds) {
    for (int i = 0; i < 30; ++i) {
      const double x = std::pow(10.0, -4.0 + 8.0 * i / 29.0);
      for (int n = 0; n <= 12; ++n) {
        const double p = crossing_probability(unit_model(kind), rate(x), n);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        ++checked;
      }
    }
  }
  CHECK(checked >= 1000);
}

TEST_CASE("high CMR concentrates mass at N = 0") {
  for (ResidenceKind kind : kAllKinds) {
    for (double cmr : {50.0, 100.0, 1000.0}) {
      CHECK(p0_p1_gap(unit_model(kind), Cmr{cmr}).p0 >= 0.97);
    }
  }
}

TEST_CASE("p0_p1_gap") {
  SUBCASE("exponential ratio is 1 + CMR") {
    for (double cmr = 1e-4; cmr < 1e3; cmr *= 1.7) {
      const CrossingGap gap = p0_p1_gap(unit_model(ResidenceKind::exponential), Cmr{cmr});
      CHECK(std::abs(gap.ratio - (1.0 + cmr)) <= 1e-12 * (1.0 + cmr));
    }
    CHECK(p0_p1_gap(unit_model(ResidenceKind::exponential), Cmr{1.0}).ratio == doctest::Approx(2.0));
  }
  SUBCASE("CMR 0.7") {
    const CrossingGap e = p0_p1_gap(unit_model(ResidenceKind::exponential), Cmr{0.7});
    CHECK(e.p0 == doctest::Approx(0.411764705882).epsilon(1e-11));
    CHECK(e.p1 == doctest::Approx(0.242214532872).epsilon(1e-11));
    const CrossingGap c = p0_p1_gap(unit_model(ResidenceKind::constant), Cmr{0.7});
    CHECK(c.p0 == doctest::Approx(0.280836148273).epsilon(1e-11));
    CHECK(c.p1 == doctest::Approx(0.362037651941).epsilon(1e-11));
    for (ResidenceKind kind : kAllKinds) {
      const CrossingGap g = p0_p1_gap(unit_model(kind), Cmr{0.7});
      CHECK(std::abs(g.p0 - g.p1) <= 0.2);
    }
  }
  SUBCASE("gap depends on the CMR, not on the mean residence") {
    const CrossingGap a = p0_p1_gap({ResidenceKind::uniform, 3.0}, Cmr{0.7});
    const CrossingGap b = p0_p1_gap({ResidenceKind::uniform, 1.0}, Cmr{0.7});
    CHECK(a.p0 == doctest::Approx(b.p0).epsilon(1e-14));
  }
}

TEST_CASE("equal_crossing_cmr") {
  CHECK_FALSE(equal_crossing_cmr(unit_model(ResidenceKind::exponential)).has_value());

  const auto constant = equal_crossing_cmr(unit_model(ResidenceKind::constant));
  REQUIRE(constant.has_value());
  CHECK(std::abs(constant->value - 1.15138865200217) <= 2e-9);

  const auto uniform = equal_crossing_cmr(unit_model(ResidenceKind::uniform));
  REQUIRE(uniform.has_value());
  CHECK(std::abs(uniform->value - 0.534775118785395) <= 2e-9);

  const CrossingGap at_root = p0_p1_gap(unit_model(ResidenceKind::constant), *constant);
  CHECK(at_root.p0 == doctest::Approx(at_root.p1).epsilon(1e-8));
}

TEST_CASE("invalid parameters are rejected") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  const ResidenceModel exp1 = unit_model(ResidenceKind::exponential);
  CHECK_THROWS_AS(lst_at_rate(exp1, rate(nan)), InvalidParameter);
  CHECK_THROWS_AS(lst_at_rate(exp1, rate(inf)), InvalidParameter);
  CHECK_THROWS_AS(lst_at_rate(exp1, rate(0.0)), InvalidParameter);
  CHECK_THROWS_AS(lst_at_rate({ResidenceKind::constant, -1.0}, rate(1.0)), InvalidParameter);
  CHECK_THROWS_AS(lst_at_rate(exp1, rate(1e-13)), InvalidParameter);
  CHECK_THROWS_AS(lst_at_rate(exp1, rate(2e6)), InvalidParameter);
  CHECK_THROWS_AS(crossing_probability(exp1, rate(1.0), -1), InvalidParameter);
  CHECK_THROWS_AS(crossing_distribution(exp1, rate(1.0), 0), InvalidParameter);
  CHECK_THROWS_AS(p0_p1_gap(exp1, Cmr{0.0}), InvalidParameter);
}

TEST_CASE("distribution names round-trip") {
  for (ResidenceKind kind : kAllKinds) CHECK(parse_residence_kind(to_string(kind)) == kind);
  CHECK(parse_residence_kind("exponential") == ResidenceKind::exponential);
  CHECK_FALSE(parse_residence_kind("gamma").has_value());
}
