#include <cmath>

#include "doctest.h"
#include "reserve/spectral.hpp"
#include "support/oracles.hpp"

using namespace reserve;
using doctest::Approx;

namespace {
const ModelParams kRef(0.5, 5.0, 0.1);  // shared reference point
}

TEST_CASE("second eigenvalue: worked cases") {
  SUBCASE("d=0 gives by hand block ((0, 0.5), (0, 0.5))") {
    const auto A = compose(ModelVariant::Baseline, kRef, Distance(0));
    const auto s = second_eigenvalue(A);
    CHECK(s.lambda2 == Approx(0.5).epsilon(1e-14));
    CHECK(s.qsd[0] == Approx(0.0));
    CHECK(s.qsd[1] == Approx(1.0));
  }
  SUBCASE("decoupled far-distance limit: block eigenvalues {1-r/2, 1-r}") {
    const auto A = TransitionMatrix::from_rows(
        {{{1, 0, 0}, {0.25, 0.75, 0}, {0, 0.5, 0.5}}});
    CHECK(second_eigenvalue(A).lambda2 == Approx(0.75).epsilon(1e-14));
  }
  SUBCASE("agrees with power iteration at d=20") {
    const auto A = compose(ModelVariant::Baseline, kRef, Distance(20));
    const double oracle = testing::power_iteration_lambda2(A);
    CHECK(second_eigenvalue(A).lambda2 == Approx(oracle).epsilon(1e-10));
  }
}

TEST_CASE("second eigenvalue: structure requirements") {
  const ModelParams with_a(0.5, 5.0, 0.1, 0.2);
  CHECK_THROWS_AS(
      second_eigenvalue(compose(ModelVariant::Recruitment, with_a, Distance(10))),
      StructureError);
  // zero transient block: no quasi-stationary distribution exists
  const auto dead = TransitionMatrix::from_rows({{{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}});
  CHECK_THROWS_AS(second_eigenvalue(dead), StructureError);
}

TEST_CASE("closed form matches power iteration on random instances") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto params = testing::random_params(rng, false, false);
    const auto A = compose(ModelVariant::Baseline, params,
                           Distance(testing::uniform(rng, 0.0, 100.0)));
    const double oracle = testing::power_iteration_lambda2(A);
    CHECK(second_eigenvalue(A).lambda2 == Approx(oracle).epsilon(1e-8));
  }
}

TEST_CASE("closed-form anchors at d=0 and far field") {
  SplitMix64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const double r = testing::uniform(rng, 0.01, 0.99);
    const double mu = testing::uniform(rng, 0.5, 30.0);
    const double alpha = testing::uniform(rng, 0.02, 1.0);
    const ModelParams p(r, mu, alpha);
    const double at0 =
        second_eigenvalue(compose(ModelVariant::Baseline, p, Distance(0))).lambda2;
    CHECK(std::abs(at0 - (1.0 - r)) <= 1e-12);
    const double far = 50.0 * std::max(mu, 1.0 / alpha);
    const double atfar =
        second_eigenvalue(compose(ModelVariant::Baseline, p, Distance(far))).lambda2;
    CHECK(std::abs(atfar - (1.0 - r / 2.0)) <= 1e-6);
  }
}

TEST_CASE("quasi-stationary distribution is a left eigenvector") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto params = testing::random_params(rng, false, true);
    const double d = testing::uniform(rng, 0.1, 80.0);
    const auto A = compose(trial % 2 ? ModelVariant::Full : ModelVariant::Baseline,
                           params, Distance(d));
    const auto s = second_eigenvalue(A);
    CHECK(s.lambda2 >= 0.0);
    CHECK(s.lambda2 <= 1.0);
    CHECK(s.qsd[0] >= 0.0);
    CHECK(s.qsd[1] >= 0.0);
    CHECK(s.qsd[0] + s.qsd[1] == Approx(1.0).epsilon(1e-10));
    const double r1 = s.qsd[0] * A(1, 1) + s.qsd[1] * A(2, 1) - s.lambda2 * s.qsd[0];
    const double r2 = s.qsd[0] * A(1, 2) + s.qsd[1] * A(2, 2) - s.lambda2 * s.qsd[1];
    CHECK(std::abs(r1) < 1e-10);
    CHECK(std::abs(r2) < 1e-10);
    // strictly positive whenever the block is irreducible
    if (A(1, 2) > 0.0 && A(2, 1) > 0.0) {
      CHECK(s.qsd[0] > 0.0);
      CHECK(s.qsd[1] > 0.0);
    }
  }
}

TEST_CASE("stationary distribution: worked cases") {
  SUBCASE("a=1 pins the chain at full occupancy") {
    const ModelParams p(0.5, 5.0, 0.1, 1.0);
    const auto st = stationary_distribution(compose(ModelVariant::Recruitment, p,
                                                    Distance(10)));
    CHECK(st.pi[0] == 0.0);
    CHECK(st.pi[1] == 0.0);
    CHECK(st.pi[2] == 1.0);
    CHECK(st.persistence == 1.0);
  }
  SUBCASE("b=1: every step passes through empty, then refills externally") {
    const double a = 0.3;
    const ModelParams p(0.5, 5.0, 0.1, a, 1.0);
    const auto st = stationary_distribution(compose(ModelVariant::Full, p, Distance(10)));
    CHECK(st.pi[0] == Approx((1 - a) * (1 - a)).epsilon(1e-12));  // 0.49
    CHECK(st.pi[1] == Approx(2 * a * (1 - a)).epsilon(1e-12));    // 0.42
    CHECK(st.pi[2] == Approx(a * a).epsilon(1e-12));              // 0.09
  }
  SUBCASE("reference point, frozen from an independent dense solve") {
    const ModelParams p(0.5, 5.0, 0.1, 0.05);
    const auto st = stationary_distribution(compose(ModelVariant::Recruitment, p,
                                                    Distance(10)));
    CHECK(st.persistence == Approx(0.373296511563568).epsilon(1e-12));
  }
  SUBCASE("extremely small a still goes through the solve") {
    const ModelParams p(0.5, 5.0, 0.1, 1e-13);
    const auto A = compose(ModelVariant::Recruitment, p, Distance(10));
    const auto st = stationary_distribution(A);
    CHECK(st.pi[0] > 1.0 - 1e-10);  // nearly always extinct
    for (int j = 0; j < 3; ++j) {
      const double bal =
          st.pi[0] * A(0, j) + st.pi[1] * A(1, j) + st.pi[2] * A(2, j) - st.pi[j];
      CHECK(std::abs(bal) < 1e-10);
    }
  }
  SUBCASE("absorbing chains are rejected") {
    CHECK_THROWS_AS(
        stationary_distribution(compose(ModelVariant::Baseline, kRef, Distance(10))),
        IrreducibilityError);
    const ModelParams a0(0.5, 5.0, 0.1, 0.0, 0.2);
    CHECK_THROWS_AS(
        stationary_distribution(compose(ModelVariant::Full, a0, Distance(10))),
        IrreducibilityError);
  }
}

TEST_CASE("stationary residual over random irreducible instances") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const auto params = testing::random_params(rng, true, trial % 2 == 0);
    const auto variant = trial % 2 ? ModelVariant::Recruitment : ModelVariant::Full;
    const auto A = compose(variant, params, Distance(testing::uniform(rng, 0.0, 80.0)));
    const auto st = stationary_distribution(A);
    double sum = 0.0;
    for (int j = 0; j < 3; ++j) {
      const double bal =
          st.pi[0] * A(0, j) + st.pi[1] * A(1, j) + st.pi[2] * A(2, j) - st.pi[j];
      CHECK(std::abs(bal) < 1e-10);
      sum += st.pi[j];
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
    CHECK(st.persistence >= 0.0);
    CHECK(st.persistence <= 1.0);
  }
}

TEST_CASE("survival probability") {
  SUBCASE("t=0 from full occupancy") {
    CHECK(survival_probability(ModelVariant::Baseline, kRef, Distance(10),
                               OccupancyDistribution::point_mass(2), 0) == 1.0);
  }
  SUBCASE("one step at d=0 halves the odds") {
    CHECK(survival_probability(ModelVariant::Baseline, kRef, Distance(0),
                               OccupancyDistribution::point_mass(2), 1) ==
          Approx(0.5).epsilon(1e-15));
  }
  SUBCASE("matches an independently computed 20-step recursion") {
    CHECK(survival_probability(ModelVariant::Baseline, kRef, Distance(10),
                               OccupancyDistribution::point_mass(2), 20) ==
          Approx(0.038256150703488145).epsilon(1e-12));
  }
  SUBCASE("negative step count rejected") {
    CHECK_THROWS_AS(survival_probability(ModelVariant::Baseline, kRef, Distance(10),
                                         OccupancyDistribution::point_mass(2), -1),
                    InvalidParameter);
  }
}

TEST_CASE("long-run decay approaches the second eigenvalue") {
  const Distance d(10);
  const auto p0 = OccupancyDistribution::point_mass(2);
  const double lambda =
      second_eigenvalue(compose(ModelVariant::Baseline, kRef, d)).lambda2;
  const double s199 = survival_probability(ModelVariant::Baseline, kRef, d, p0, 199);
  const double s200 = survival_probability(ModelVariant::Baseline, kRef, d, p0, 200);
  CHECK(s200 > 0.0);  // no cancellation even at ~1e-15 scale
  CHECK(std::abs(std::log(s200) - std::log(s199) - std::log(lambda)) < 1e-6);
}
