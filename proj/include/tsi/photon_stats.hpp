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

#ifndef TSI_PHOTON_STATS_HPP_
#define TSI_PHOTON_STATS_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "tsi/map_orbits.hpp"
#include "tsi/tsi_state.hpp"

namespace tsi {

// All expectations are taken inside the truncated space; the state is the
// whole vector, there is no tail to correct for.

struct ParityProbabilities {
  double p_even = 0.0;
  double p_odd = 0.0;
};

ParityProbabilities even_odd(const FockVector& state);

struct NumberMoments {
  double mean_n = 0.0;
  double delta_n = 0.0;  // standard deviation, not variance
};

NumberMoments number_moments(const FockVector& state);

/// (Delta n^2 - <n>) / <n>. Throws UndefinedStatistic when <n> = 0.
double mandel_q(const FockVector& state);

/// (<n^2> - <n>) / <n>^2. Throws UndefinedStatistic when <n> = 0.
double g2_zero(const FockVector& state);

struct QuadratureSpread {
  double dx1 = 0.0;  // std. deviation of X1 = (a + a^dag) / 2
  double dx2 = 0.0;  // std. deviation of X2 = (a - a^dag) / 2i
};

QuadratureSpread quadrature_variances(const FockVector& state);

/// Q(beta) = |<beta|psi>|^2 / pi, overlap summed in log space.
double husimi_q(const FockVector& state, Complex beta);

struct AxisRange {
  double lo = -6.0;
  double hi = 6.0;
};

struct HusimiGrid {
  std::vector<double> re_axis;
  std::vector<double> im_axis;
  std::vector<double> values;  // row-major, values[i * re_axis.size() + j] at (re_j, im_i)

  double at(std::size_t im_index, std::size_t re_index) const {
    return values[im_index * re_axis.size() + re_index];
  }
  /// Trapezoid-rule integral of Q over the window; ~1 for wide windows.
  double integral() const;
};

inline constexpr int kDefaultHusimiResolution = 121;

HusimiGrid husimi_grid(const FockVector& state, AxisRange re_range = {}, AxisRange im_range = {},
                       int resolution = kDefaultHusimiResolution);

struct StatsReport {
  int n = 0;  // truncation the report was computed at
  double p_even = 0.0;
  double p_odd = 0.0;
  double mean_n = 0.0;
  double delta_n = 0.0;
  std::optional<double> mandel_q;  // absent for vacuum-only states
  std::optional<double> g2;
  double dx1 = 0.0;
  double dx2 = 0.0;
  /// P_odd > 0.5, i.e. the P function cannot be a classical density.
  bool nonclassical_parity = false;
};

StatsReport compute_stats(const FockVector& state);

/// One report per truncation N = 0..n_max, each state renormalized on its own.
std::vector<StatsReport> stats_sweep(const MapSpec& map, int n_max);

}  // namespace tsi

#endif  // TSI_PHOTON_STATS_HPP_
