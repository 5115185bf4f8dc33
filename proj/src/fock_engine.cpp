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

#include "tsi/fock_engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tsi/errors.hpp"

namespace tsi {
namespace {

constexpr int kMaxCutoff = 1024;

Eigen::VectorXcd to_eigen(const FockVector& v) {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i];
  return out;
}

FockVector from_eigen(const Eigen::VectorXcd& v) {
  return FockVector(std::vector<Complex>(v.data(), v.data() + v.size()));
}

void check_tail(const Eigen::VectorXcd& v, int cutoff, int step, const char* stage) {
  const Eigen::Index half = cutoff / 2;
  const double total = v.squaredNorm();
  if (!(total > 0.0)) return;
  const double tail = v.tail(v.size() - half - 1).squaredNorm() / total;
  if (tail > kTailTolerance) {
    throw CutoffInsufficient("cutoff " + std::to_string(cutoff) + " insufficient: relative tail mass " +
                                 std::to_string(tail) + " above cutoff/2 after " + stage +
                                 " at step " + std::to_string(step),
                             cutoff, tail);
  }
}

}  // namespace

FockVector OperatorMatrix::apply(const FockVector& v) const {
  const FockVector padded = v.resized(cutoff());
  return from_eigen(entries * to_eigen(padded));
}

OperatorMatrix displacement_matrix(Complex alpha, int cutoff) {
  if (cutoff < 0) throw DomainError("displacement_matrix: cutoff must be nonnegative");
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw DomainError("displacement_matrix: alpha is not finite");
  }
  const Eigen::Index size = cutoff + 1;
  if (alpha == Complex{}) return {Eigen::MatrixXcd::Identity(size, size)};

  // <n+k|D|n> = sqrt(n!/(n+k)!) alpha^k e^{-x/2} L_n^{(k)}(x) and
  // <n|D|n+k> = sqrt(n!/(n+k)!) (-alpha^*)^k e^{-x/2} L_n^{(k)}(x), x = |alpha|^2.
  // L_n^{(k)} runs up in n by its three-term recurrence, rescaled to stay in
  // range; magnitudes are assembled in log space.
  const double x = std::norm(alpha);
  const double log_abs_alpha = 0.5 * std::log(x);
  const Complex below = alpha / std::abs(alpha);
  const Complex above = -std::conj(below);
  std::vector<double> log_factorial(static_cast<std::size_t>(size) + 1);
  for (Eigen::Index k = 0; k <= size; ++k) log_factorial[k] = std::lgamma(static_cast<double>(k) + 1.0);

  constexpr double kRescale = 1e150;
  const double log_rescale = std::log(kRescale);
  Eigen::MatrixXcd d(size, size);
  for (Eigen::Index k = 0; k < size; ++k) {
    const Complex phase_below = std::pow(below, static_cast<double>(k));
    const Complex phase_above = std::pow(above, static_cast<double>(k));
    double l_prev = 0.0;
    double l = 1.0;  // L_0^{(k)}
    double log_scale = 0.0;
    for (Eigen::Index n = 0; n + k < size; ++n) {
      if (n == 1) {
        l_prev = l;
        l = 1.0 + k - x;
      } else if (n > 1) {
        const double next = ((2.0 * n - 1.0 + k - x) * l - (n - 1.0 + k) * l_prev) / static_cast<double>(n);
        l_prev = l;
        l = next;
      }
      if (std::abs(l) > kRescale) {
        l /= kRescale;
        l_prev /= kRescale;
        log_scale += log_rescale;
      }
      double magnitude = 0.0;
      if (l != 0.0) {
        const double log_mag = 0.5 * (log_factorial[n] - log_factorial[n + k]) + k * log_abs_alpha - 0.5 * x +
                               std::log(std::abs(l)) + log_scale;
        magnitude = std::copysign(std::exp(log_mag), l);
      }
      d(n + k, n) = magnitude * phase_below;
      if (k > 0) d(n, n + k) = magnitude * phase_above;
    }
  }
  return {std::move(d)};
}

OperatorMatrix creation_matrix(int cutoff) {
  if (cutoff < 0) throw DomainError("creation_matrix: cutoff must be nonnegative");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
  for (int n = 0; n < cutoff; ++n) m(n + 1, n) = std::sqrt(static_cast<double>(n + 1));
  return {std::move(m)};
}

OperatorMatrix annihilation_matrix(int cutoff) {
  OperatorMatrix a = creation_matrix(cutoff);
  a.entries.transposeInPlace();
  return a;
}

OperatorMatrix attenuation_matrix(double transmittance, int cutoff) {
  if (cutoff < 0) throw DomainError("attenuation_matrix: cutoff must be nonnegative");
  if (!(transmittance > 0.0 && transmittance <= 1.0)) {
    throw DomainError("attenuation_matrix: transmittance must be in (0,1]");
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
  double power = 1.0;
  for (int n = 0; n <= cutoff; ++n) {
    m(n, n) = power;
    power *= transmittance;
  }
  return {std::move(m)};
}

double ChainSpec::reflectance() const {
  return std::sqrt(std::max(0.0, 1.0 - transmittance * transmittance));
}

void validate(const ChainSpec& spec) {
  if (spec.alphas.empty()) throw DomainError("chain needs at least one displacement");
  if (!(spec.transmittance > 0.0 && spec.transmittance < 1.0)) {
    throw DomainError("transmittance must be in (0,1)");
  }
  for (const Complex& a : spec.alphas) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw DomainError("chain displacement is not finite");
    }
  }
  if (spec.skip_index && (*spec.skip_index < 1 || *spec.skip_index > spec.n_steps())) {
    throw DomainError("skip index must be in 1..N");
  }
}

FockVector apply_chain(const ChainSpec& spec, int cutoff) {
  validate(spec);
  const int steps = spec.n_steps();
  if (cutoff < 1) throw DomainError("apply_chain: cutoff must be positive");

  const Eigen::Index size = cutoff + 1;
  Eigen::VectorXd attenuation(size);
  attenuation[0] = 1.0;
  for (Eigen::Index n = 1; n < size; ++n) attenuation[n] = attenuation[n - 1] * spec.transmittance;

  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(size);
  v[0] = 1.0;
  for (int k = 1; k <= steps; ++k) {
    v = displacement_matrix(spec.alphas[k - 1], cutoff).entries * v;
    check_tail(v, cutoff, k, "displacement");
    v = v.cwiseProduct(attenuation.cast<Complex>());
    if (spec.skip_index != k) {
      // a^dag: shift up with sqrt(n+1); the top component leaves the space.
      for (Eigen::Index n = size - 1; n >= 1; --n) v[n] = std::sqrt(static_cast<double>(n)) * v[n - 1];
      v[0] = 0.0;
      check_tail(v, cutoff, k, "creation");
    }
  }
  v = displacement_matrix(spec.alphas[steps], cutoff).entries * v;
  check_tail(v, cutoff, steps + 1, "final displacement");

  const int r_power = spec.skip_index ? steps - 1 : steps;
  v *= std::pow(spec.reflectance(), r_power);
  return from_eigen(v);
}

int default_cutoff(const ChainSpec& spec) {
  double max_alpha2 = 0.0;
  for (const Complex& a : spec.alphas) max_alpha2 = std::max(max_alpha2, std::norm(a));
  return static_cast<int>(std::ceil(4.0 * (spec.n_steps() + max_alpha2 + 1.0)));
}

ChainResult apply_chain_converged(const ChainSpec& spec, std::optional<int> cutoff) {
  if (cutoff) return {apply_chain(spec, *cutoff), *cutoff};

  auto grow = [](int c) { return std::min(kMaxCutoff, static_cast<int>(std::ceil(1.5 * c))); };
  int c = std::min(kMaxCutoff, default_cutoff(spec));
  while (true) {
    try {
      FockVector base = apply_chain(spec, c);
      const int check_cutoff = grow(c);
      const FockVector finer = apply_chain(spec, check_cutoff);
      const double n1 = base.norm2();
      const double n2 = finer.norm2();
      if (std::abs(n1 - n2) <= kConvergenceTolerance * std::max({n1, n2, 1e-300})) {
        return {std::move(base), c};
      }
    } catch (const CutoffInsufficient&) {
      if (c >= kMaxCutoff) throw;
    }
    if (c >= kMaxCutoff) {
      throw CutoffInsufficient("cutoff policy did not converge below " + std::to_string(kMaxCutoff),
                               c, 0.0);
    }
    c = grow(c);
  }
}

}  // namespace tsi
