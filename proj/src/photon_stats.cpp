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

#include <cmath>
#include <numbers>

#include "tsi/errors.hpp"

namespace tsi {
namespace {

struct RawMoments {
  double total = 0.0;
  double n1 = 0.0;  // <n>
  double n2 = 0.0;  // <n^2>
};

RawMoments raw_moments(const FockVector& state) {
  RawMoments m;
  for (std::size_t n = 0; n < state.size(); ++n) {
    const double p = std::norm(state[n]);
    const double dn = static_cast<double>(n);
    m.total += p;
    m.n1 += p * dn;
    m.n2 += p * dn * dn;
  }
  if (m.total > 0.0) {
    m.n1 /= m.total;
    m.n2 /= m.total;
  }
  return m;
}

double require_mean(const RawMoments& m, const char* what) {
  if (!(m.n1 > 0.0)) throw UndefinedStatistic(std::string(what) + " is undefined for <n> = 0");
  return m.n1;
}

}  // namespace

ParityProbabilities even_odd(const FockVector& state) {
  ParityProbabilities out;
  for (std::size_t n = 0; n < state.size(); ++n) {
    (n % 2 == 0 ? out.p_even : out.p_odd) += std::norm(state[n]);
  }
  return out;
}

NumberMoments number_moments(const FockVector& state) {
  const RawMoments m = raw_moments(state);
  return {m.n1, std::sqrt(std::max(0.0, m.n2 - m.n1 * m.n1))};
}

double mandel_q(const FockVector& state) {
  const RawMoments m = raw_moments(state);
  const double mean = require_mean(m, "Mandel Q");
  return (m.n2 - mean * mean - mean) / mean;
}

double g2_zero(const FockVector& state) {
  const RawMoments m = raw_moments(state);
  const double mean = require_mean(m, "g2(0)");
  return (m.n2 - mean) / (mean * mean);
}

QuadratureSpread quadrature_variances(const FockVector& state) {
  Complex a1{};  // <a>
  Complex a2{};  // <a^2>
  for (std::size_t n = 1; n < state.size(); ++n) {
    a1 += std::conj(state[n - 1]) * std::sqrt(static_cast<double>(n)) * state[n];
  }
  for (std::size_t n = 2; n < state.size(); ++n) {
    a2 += std::conj(state[n - 2]) * std::sqrt(static_cast<double>(n * (n - 1))) * state[n];
  }
  const RawMoments m = raw_moments(state);
  const double total = m.total > 0.0 ? m.total : 1.0;
  a1 /= total;
  a2 /= total;
  // <X1^2> = (<a^2> + <a^dag^2> + 2<n> + 1)/4, using [a, a^dag] = 1.
  const double x1_sq = (2.0 * a2.real() + 2.0 * m.n1 + 1.0) / 4.0;
  const double x2_sq = (-2.0 * a2.real() + 2.0 * m.n1 + 1.0) / 4.0;
  const double x1 = a1.real();
  const double x2 = a1.imag();
  return {std::sqrt(std::max(0.0, x1_sq - x1 * x1)), std::sqrt(std::max(0.0, x2_sq - x2 * x2))};
}

double husimi_q(const FockVector& state, Complex beta) {
  const double r2 = std::norm(beta);
  Complex amp{};
  if (r2 == 0.0) {
    amp = state.size() > 0 ? state[0] : Complex{};
  } else {
    // <beta|n> = exp(-|beta|^2/2) (beta^*)^n / sqrt(n!)
    const Complex log_conj_beta = std::log(std::conj(beta));
    for (std::size_t n = 0; n < state.size(); ++n) {
      if (state[n] == Complex{}) continue;
      const double dn = static_cast<double>(n);
      const Complex log_term = dn * log_conj_beta - 0.5 * std::lgamma(dn + 1.0) - 0.5 * r2;
      amp += std::exp(log_term) * state[n];
    }
  }
  return std::norm(amp) * std::numbers::inv_pi;
}

double HusimiGrid::integral() const {
  if (re_axis.size() < 2 || im_axis.size() < 2) return 0.0;
  const double dre = (re_axis.back() - re_axis.front()) / static_cast<double>(re_axis.size() - 1);
  const double dim = (im_axis.back() - im_axis.front()) / static_cast<double>(im_axis.size() - 1);
  // Trapezoid weights: half on edges, quarter on corners.
  double sum = 0.0;
  for (std::size_t i = 0; i < im_axis.size(); ++i) {
    const double wi = (i == 0 || i + 1 == im_axis.size()) ? 0.5 : 1.0;
    for (std::size_t j = 0; j < re_axis.size(); ++j) {
      const double wj = (j == 0 || j + 1 == re_axis.size()) ? 0.5 : 1.0;
      sum += wi * wj * at(i, j);
    }
  }
  return sum * dre * dim;
}

HusimiGrid husimi_grid(const FockVector& state, AxisRange re_range, AxisRange im_range,
                       int resolution) {
  if (resolution < 2) throw DomainError("husimi_grid: resolution must be >= 2");
  for (double v : {re_range.lo, re_range.hi, im_range.lo, im_range.hi}) {
    if (!std::isfinite(v)) throw DomainError("husimi_grid: non-finite range");
  }
  auto axis = [resolution](AxisRange r) {
    std::vector<double> out(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
      out[i] = r.lo + (r.hi - r.lo) * static_cast<double>(i) / static_cast<double>(resolution - 1);
    }
    return out;
  };
  HusimiGrid grid;
  grid.re_axis = axis(re_range);
  grid.im_axis = axis(im_range);
  grid.values.resize(grid.re_axis.size() * grid.im_axis.size());
  for (std::size_t i = 0; i < grid.im_axis.size(); ++i) {
    for (std::size_t j = 0; j < grid.re_axis.size(); ++j) {
      grid.values[i * grid.re_axis.size() + j] =
          husimi_q(state, Complex{grid.re_axis[j], grid.im_axis[i]});
    }
  }
  return grid;
}

StatsReport compute_stats(const FockVector& state) {
  StatsReport r;
  r.n = state.dim();
  const ParityProbabilities parity = even_odd(state);
  r.p_even = parity.p_even;
  r.p_odd = parity.p_odd;
  const NumberMoments moments = number_moments(state);
  r.mean_n = moments.mean_n;
  r.delta_n = moments.delta_n;
  if (r.mean_n > 0.0) {
    r.mandel_q = mandel_q(state);
    r.g2 = g2_zero(state);
  }
  const QuadratureSpread quad = quadrature_variances(state);
  r.dx1 = quad.dx1;
  r.dx2 = quad.dx2;
  r.nonclassical_parity = r.p_odd > 0.5;
  return r;
}

std::vector<StatsReport> stats_sweep(const MapSpec& map, int n_max) {
  if (n_max < 0) throw DomainError("stats_sweep: n_max must be nonnegative");
  // One orbit serves every truncation; each prefix is normalized on its own.
  const Orbit full = orbit(map, n_max);
  std::vector<StatsReport> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    FockVector prefix(std::vector<Complex>(full.values.begin(), full.values.begin() + n + 1));
    out.push_back(compute_stats(prefix.normalized()));
  }
  return out;
}

}  // namespace tsi
