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

#include "tsi/tsi_state.hpp"

#include <algorithm>
#include <cmath>

#include "tsi/errors.hpp"

namespace tsi {

FockVector FockVector::vacuum(int dim) { return number_state(0, dim); }

FockVector FockVector::number_state(int n, int dim) {
  if (n < 0 || dim < n) throw DomainError("number_state: need 0 <= n <= dim");
  std::vector<Complex> amps(static_cast<std::size_t>(dim) + 1, Complex{});
  amps[n] = 1.0;
  return FockVector(std::move(amps));
}

double FockVector::norm2() const {
  double sum = 0.0;
  for (const Complex& c : amplitudes_) sum += std::norm(c);
  return sum;
}

bool FockVector::is_normalized(double tol) const { return std::abs(norm2() - 1.0) < tol; }

FockVector FockVector::normalized() const {
  const double n2 = norm2();
  if (!(n2 > 0.0) || !std::isfinite(n2)) throw NormalizationError("cannot normalize a zero vector");
  const double inv = 1.0 / std::sqrt(n2);
  std::vector<Complex> amps(amplitudes_);
  for (Complex& c : amps) c *= inv;
  return FockVector(std::move(amps));
}

FockVector FockVector::resized(int dim) const {
  std::vector<Complex> amps(amplitudes_);
  amps.resize(static_cast<std::size_t>(dim) + 1, Complex{});
  return FockVector(std::move(amps));
}

Complex overlap(const FockVector& a, const FockVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  Complex sum{};
  for (std::size_t i = 0; i < n; ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

double norm2(const FockVector& a) { return a.norm2(); }

FockVector build_tsi(const MapSpec& map, int n_max) {
  Orbit o = orbit(map, n_max);
  FockVector raw(std::move(o.values));
  if (raw.norm2() == 0.0) throw NormalizationError("orbit is identically zero");
  return raw.normalized();
}

FockVector truncate_and_renormalize(const MapSpec& map, int n) { return build_tsi(map, n); }

std::vector<double> photon_distribution(const FockVector& state) {
  std::vector<double> p;
  p.reserve(state.size());
  for (const Complex& c : state.amplitudes()) p.push_back(std::norm(c));
  return p;
}

}  // namespace tsi
