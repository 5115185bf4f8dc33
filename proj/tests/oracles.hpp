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

// Independent reference implementations used only by the tests.

#ifndef TSI_TESTS_ORACLES_HPP_
#define TSI_TESTS_ORACLES_HPP_

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <span>
#include <vector>

#include "tsi/fock_engine.hpp"
#include "tsi/tsi_state.hpp"

namespace tsi::oracle {

/// exp(m) by scaling and squaring of a Taylor series.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m);

/// exp(alpha a^dag - alpha^* a) with the generator truncated at
/// cutoff + padding, returned as its top-left (cutoff+1) block.
Eigen::MatrixXcd displacement_expm(Complex alpha, int cutoff, int padding = 0);

/// <m|D(alpha)|n> from the normal-ordered finite sum, in long double.
/// Alternating terms; only accurate for small indices and |alpha|.
Complex displacement_series(Complex alpha, int m, int n);

/// Chain output from dense matrices (padded expm displacements) at a fixed cutoff.
FockVector chain_dense(const ChainSpec& spec, int cutoff);

/// c_N/sqrt(N!) Prod (a^dag - beta_k^*)|0> by repeated application of a^dag.
std::vector<Complex> state_from_betas(std::span<const Complex> betas, Complex leading);

/// Normalized vector of N+1 Gaussian amplitudes with |c_N| bounded away from 0.
FockVector random_state(std::mt19937_64& rng, int n);

/// Statistics computed straight from P_n.
struct DirectStats {
  double mean_n;
  double variance;
  double mandel_q;
  double g2;
};
DirectStats direct_stats(const FockVector& state);

/// Up to a global phase: min over phi of max_k |a_k - e^{i phi} b_k|.
double phase_aligned_distance(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace tsi::oracle

#endif  // TSI_TESTS_ORACLES_HPP_
