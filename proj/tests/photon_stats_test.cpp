// Copyright 2026 The TSI Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tsi/photon_stats.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "tsi/errors.hpp"
#include "tsi/map_orbits.hpp"

namespace tsi {
namespace {

constexpr double kInvPi = 1.0 / std::numbers::pi;

FockVector two_point() {
  const double h = 1.0 / std::sqrt(2.0);
  return FockVector({h, 0.0, h});
}

TEST(EvenOddTest, Examples) {
  const auto vac = even_odd(FockVector::vacuum(1));
  EXPECT_EQ(vac.p_even, 1.0);
  EXPECT_EQ(vac.p_odd, 0.0);
  const auto one = even_odd(FockVector::number_state(1, 1));
  EXPECT_EQ(one.p_even, 0.0);
  EXPECT_EQ(one.p_odd, 1.0);
}

TEST(EvenOddTest, ChaoticSeedCrossesHalf) {
  int crossings = 0;
  const auto reports = stats_sweep(MapSpec::doubling(0.29711), 50);
  for (std::size_t n = 1; n < reports.size(); ++n) {
    crossings += (reports[n].p_odd > 0.5) != (reports[n - 1].p_odd > 0.5);
  }
  EXPECT_GE(crossings, 2);
}

TEST(MomentsTest, Examples) {
  const auto fock = number_moments(FockVector::number_state(3, 5));
  EXPECT_EQ(fock.mean_n, 3.0);
  EXPECT_EQ(fock.delta_n, 0.0);
  const auto tp = number_moments(two_point());
  EXPECT_NEAR(tp.mean_n, 1.0, 1e-15);
  EXPECT_NEAR(tp.delta_n, 1.0, 1e-15);
}

TEST(MomentsTest, DoublingMeanGrowsNearLinearly) {
  const auto reports = stats_sweep(MapSpec::doubling_exact(3, 10), 50);
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  const double count = 43;
  for (int n = 8; n <= 50; ++n) {
    const double y = reports[n].mean_n;
    sx += n;
    sy += y;
    sxx += n * n;
    syy += y * y;
    sxy += n * y;
  }
  const double corr = (count * sxy - sx * sy) / std::sqrt((count * sxx - sx * sx) * (count * syy - sy * sy));
  EXPECT_GT(corr, 0.995);
}

TEST(MandelTest, Examples) {
  EXPECT_DOUBLE_EQ(mandel_q(FockVector::number_state(4, 6)), -1.0);
  EXPECT_NEAR(mandel_q(two_point()), 0.0, 1e-15);
  EXPECT_THROW(mandel_q(FockVector::vacuum(3)), UndefinedStatistic);
  EXPECT_THROW(g2_zero(FockVector::vacuum(3)), UndefinedStatistic);
}

TEST(MandelTest, SmallTruncationsAreSubPoissonian) {
  for (const MapSpec& m : {MapSpec::doubling(0.3), MapSpec::logistic(3.49, 0.2)}) {
    const auto reports = stats_sweep(m, 50);
    for (int n = 1; n <= 5; ++n) EXPECT_LT(*reports[n].mandel_q, 0.0) << n;
    for (int n = 15; n <= 50; ++n) EXPECT_GT(*reports[n].mandel_q, 0.0) << n;
  }
}

TEST(G2Test, Examples) {
  EXPECT_DOUBLE_EQ(g2_zero(FockVector::number_state(1, 2)), 0.0);
  EXPECT_DOUBLE_EQ(g2_zero(FockVector::number_state(2, 2)), 0.5);
}

TEST(QuadratureTest, Examples) {
  const auto vac = quadrature_variances(FockVector::vacuum(4));
  EXPECT_EQ(vac.dx1, 0.5);
  EXPECT_EQ(vac.dx2, 0.5);
  const auto one = quadrature_variances(FockVector::number_state(1, 3));
  EXPECT_NEAR(one.dx1, std::sqrt(3.0) / 2.0, 1e-15);
  EXPECT_NEAR(one.dx2, std::sqrt(3.0) / 2.0, 1e-15);
}

TEST(QuadratureTest, CoherentLikeSuperpositionMatchesMatrices) {
  // Brute force: X1 = (a + a^dag)/2, X2 = (a - a^dag)/2i as dense matrices.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const FockVector s = oracle::random_state(rng, 7);
    const int d = s.dim();
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d + 1, d + 1);
    for (int n = 1; n <= d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    Eigen::VectorXcd v(d + 1);
    for (int n = 0; n <= d; ++n) v[n] = s[n];
    const Eigen::MatrixXcd x1 = (a + a.adjoint()) / 2.0;
    const Eigen::MatrixXcd x2 = (a - a.adjoint()) / Complex(0.0, 2.0);
    auto spread = [&](const Eigen::MatrixXcd& x) {
      const double m = v.dot(x * v).real();
      Eigen::MatrixXcd x_sq = x * x;
      // The top level of a truncated X^2 misses the a a^dag term from |d+1>.
      x_sq(d, d) += (d + 1.0) / 4.0;
      return std::sqrt(v.dot(x_sq * v).real() - m * m);
    };
    const auto q = quadrature_variances(s);
    EXPECT_NEAR(q.dx1, spread(x1), 1e-12);
    EXPECT_NEAR(q.dx2, spread(x2), 1e-12);
  }
}

TEST(HusimiTest, PointExamples) {
  EXPECT_NEAR(husimi_q(FockVector::vacuum(0), 0.0), kInvPi, 1e-16);
  EXPECT_EQ(husimi_q(FockVector::number_state(1, 1), 0.0), 0.0);
  EXPECT_NEAR(husimi_q(FockVector::vacuum(0), std::polar(1.0, 0.4)), std::exp(-1.0) * kInvPi, 1e-16);
}

TEST(HusimiTest, LargeDimensionAndAmplitudeStayFinite) {
  const FockVector s = build_tsi(MapSpec::logistic(4.0, 0.2), 200);
  const double q = husimi_q(s, Complex{25.0, -30.0});
  EXPECT_TRUE(std::isfinite(q));
  EXPECT_GE(q, 0.0);
}

TEST(HusimiGridTest, VacuumPeak) {
  const HusimiGrid g = husimi_grid(FockVector::vacuum(0), {-3, 3}, {-3, 3}, 61);
  ASSERT_EQ(g.values.size(), 61u * 61u);
  double peak = 0.0;
  std::size_t pi = 0, pj = 0;
  for (std::size_t i = 0; i < 61; ++i) {
    for (std::size_t j = 0; j < 61; ++j) {
      if (g.at(i, j) > peak) {
        peak = g.at(i, j);
        pi = i;
        pj = j;
      }
    }
  }
  EXPECT_EQ(pi, 30u);
  EXPECT_EQ(pj, 30u);
  EXPECT_NEAR(peak, kInvPi, 1e-15);
}

TEST(HusimiGridTest, RejectsBadGrid) {
  EXPECT_THROW(husimi_grid(FockVector::vacuum(0), {}, {}, 1), DomainError);
}

TEST(HusimiGridTest, NearbySeedsGiveSimilarGrids) {
  auto correlation = [](const HusimiGrid& a, const HusimiGrid& b) {
    double ab = 0, aa = 0, bb = 0;
    for (std::size_t k = 0; k < a.values.size(); ++k) {
      ab += a.values[k] * b.values[k];
      aa += a.values[k] * a.values[k];
      bb += b.values[k] * b.values[k];
    }
    return ab / std::sqrt(aa * bb);
  };
  // The two orbits agree to about 0.05 through n = 4 and split afterwards.
  const HusimiGrid a4 = husimi_grid(build_tsi(MapSpec::doubling(0.3), 4));
  const HusimiGrid b4 = husimi_grid(build_tsi(MapSpec::doubling(0.29711), 4));
  EXPECT_GT(correlation(a4, b4), 0.999);

  const HusimiGrid a = husimi_grid(build_tsi(MapSpec::doubling(0.3), 15));
  const HusimiGrid b = husimi_grid(build_tsi(MapSpec::doubling(0.29711), 15));
  EXPECT_GT(correlation(a, b), 0.8);
  EXPECT_LT(correlation(a, b), 0.9);
  EXPECT_NEAR(a.integral(), 1.0, 1e-3);
  EXPECT_NEAR(b.integral(), 1.0, 1e-3);
}

TEST(SweepTest, VacuumEntryAndShape) {
  const auto reports = stats_sweep(MapSpec::doubling(0.3), 10);
  ASSERT_EQ(reports.size(), 11u);
  EXPECT_EQ(reports[0].n, 0);
  EXPECT_FALSE(reports[0].mandel_q.has_value());
  EXPECT_FALSE(reports[0].g2.has_value());
  EXPECT_EQ(reports[0].dx1, 0.5);
  for (int n = 1; n <= 10; ++n) EXPECT_TRUE(reports[n].g2.has_value());
}

TEST(SweepTest, LogisticFourIsIrregular) {
  // Plateaus alternate with jumps; a regular orbit gives increments of one scale.
  auto spread = [](const MapSpec& m) {
    const auto reports = stats_sweep(m, 50);
    std::vector<double> steps;
    for (int n = 11; n <= 50; ++n) steps.push_back(std::abs(*reports[n].mandel_q - *reports[n - 1].mandel_q));
    const auto [lo, hi] = std::minmax_element(steps.begin(), steps.end());
    return *hi / *lo;
  };
  EXPECT_GT(spread(MapSpec::logistic(4.0, 0.2)), 1e3);
  EXPECT_LT(spread(MapSpec::doubling_exact(3, 10)), 1e2);
}

TEST(SweepTest, QuadratureSpreadGrowsWithN) {
  const auto reports = stats_sweep(MapSpec::doubling(0.3), 40);
  EXPECT_GT(reports[40].dx1, reports[10].dx1);
  EXPECT_GT(reports[40].dx2, reports[10].dx2);
}

// Fock-state oracles for n = 1..10.
TEST(StatsPropertyTest, FockOracles) {
  for (int n = 1; n <= 10; ++n) {
    const FockVector s = FockVector::number_state(n, n + 3);
    EXPECT_DOUBLE_EQ(mandel_q(s), -1.0);
    EXPECT_NEAR(g2_zero(s), 1.0 - 1.0 / n, 1e-15);
    const auto q = quadrature_variances(s);
    EXPECT_NEAR(q.dx1, std::sqrt(2.0 * n + 1.0) / 2.0, 1e-14);
    EXPECT_NEAR(q.dx2, std::sqrt(2.0 * n + 1.0) / 2.0, 1e-14);
  }
}

TEST(StatsPropertyTest, IdentitiesOnRandomAndGeneratedStates) {
  std::mt19937_64 rng(7);
  std::vector<FockVector> states;
  for (int trial = 0; trial < 50; ++trial) states.push_back(oracle::random_state(rng, 1 + trial % 12));
  for (const MapSpec& m : {MapSpec::doubling(0.3), MapSpec::doubling(0.29711), MapSpec::logistic(3.49, 0.2),
                           MapSpec::logistic(4.0, 0.2)}) {
    for (int n = 1; n <= 50; n += 7) states.push_back(build_tsi(m, n));
  }
  for (const FockVector& s : states) {
    const StatsReport r = compute_stats(s);
    EXPECT_NEAR(r.p_even + r.p_odd, 1.0, 1e-12);
    ASSERT_TRUE(r.mandel_q && r.g2);
    EXPECT_LT(std::abs(*r.mandel_q - (*r.g2 - 1.0) * r.mean_n), 1e-9);
    const auto direct = oracle::direct_stats(s);
    EXPECT_NEAR(r.mean_n, direct.mean_n, 1e-12);
    EXPECT_NEAR(*r.mandel_q, direct.mandel_q, 1e-9);
    EXPECT_NEAR(*r.g2, direct.g2, 1e-9);
    EXPECT_GE(r.delta_n, 0.0);
    EXPECT_LE(r.mean_n, s.dim());
    EXPECT_GE(r.g2.value(), 0.0);
    EXPECT_GE(r.dx1 * r.dx2, 0.25 - 1e-9);
    EXPECT_EQ(r.nonclassical_parity, r.p_odd > 0.5);
  }
}

TEST(StatsPropertyTest, HusimiBoundsAndNormalization) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const FockVector s = oracle::random_state(rng, 1 + trial);
    const HusimiGrid g = husimi_grid(s);
    for (double q : g.values) {
      EXPECT_GE(q, 0.0);
      EXPECT_LE(q, kInvPi * (1.0 + 1e-12));
    }
    EXPECT_NEAR(g.integral(), 1.0, 1e-3);
  }
}

}  // namespace
}  // namespace tsi
