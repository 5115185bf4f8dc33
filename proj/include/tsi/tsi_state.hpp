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

#ifndef TSI_TSI_STATE_HPP_
#define TSI_TSI_STATE_HPP_

#include <complex>
#include <span>
#include <vector>

#include "tsi/map_orbits.hpp"

namespace tsi {

/// Amplitudes c_0..c_D over the Fock states |0>..|D>.
///
/// Vectors coming out of the chain simulator are deliberately unnormalized
/// (their norm is a success probability), so normalization is not an
/// invariant of the type itself; `is_normalized` checks it.
class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {}

  static FockVector vacuum(int dim = 0);
  static FockVector number_state(int n, int dim);

  int dim() const { return static_cast<int>(amplitudes_.size()) - 1; }
  std::size_t size() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t n) const { return amplitudes_[n]; }
  Complex& operator[](std::size_t n) { return amplitudes_[n]; }

  double norm2() const;
  bool is_normalized(double tol = 1e-12) const;
  /// Divides by the Euclidean norm; NormalizationError on a zero vector.
  FockVector normalized() const;
  /// Zero-pads (or truncates) to the given largest Fock index.
  FockVector resized(int dim) const;

 private:
  std::vector<Complex> amplitudes_;
};

/// Sum_n a_n^* b_n; the shorter vector is zero-padded.
Complex overlap(const FockVector& a, const FockVector& b);
double norm2(const FockVector& a);

/// |TSI> = Sum_{n=0}^{N} C_n |n>, with C_n the normalized orbit.
FockVector build_tsi(const MapSpec& map, int n_max);

/// Fresh TSI at dimension n; identical to build_tsi, named for sweeps.
FockVector truncate_and_renormalize(const MapSpec& map, int n);

/// P_n = |c_n|^2.
std::vector<double> photon_distribution(const FockVector& state);

}  // namespace tsi

#endif  // TSI_TSI_STATE_HPP_
