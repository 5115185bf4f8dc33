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

#ifndef TSI_FOCK_ENGINE_HPP_
#define TSI_FOCK_ENGINE_HPP_

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "tsi/tsi_state.hpp"

namespace tsi {

/// Square operator on the Fock states |0>..|cutoff>.
struct OperatorMatrix {
  Eigen::MatrixXcd entries;

  int cutoff() const { return static_cast<int>(entries.rows()) - 1; }
  FockVector apply(const FockVector& v) const;
};

/// <m|D(alpha)|n> for m, n <= cutoff. Elements are exact (they do not depend
/// on the cutoff); only the truncation of the operator is approximate.
OperatorMatrix displacement_matrix(Complex alpha, int cutoff);
OperatorMatrix creation_matrix(int cutoff);
OperatorMatrix annihilation_matrix(int cutoff);
/// Diagonal T^n.
OperatorMatrix attenuation_matrix(double transmittance, int cutoff);

/// Conditional generation chain
///   R^N D(alpha_{N+1}) [a^dag T^n D(alpha_N)] ... [a^dag T^n D(alpha_1)] |0>
/// With `skip_index` = k the k-th a^dag (counted from alpha_1) is replaced by
/// the identity and the prefactor becomes R^{N-1}.
struct ChainSpec {
  std::vector<Complex> alphas;  // alpha_1 .. alpha_{N+1}
  double transmittance = 0.5;   // amplitude transmittance T
  std::optional<int> skip_index;

  int n_steps() const { return static_cast<int>(alphas.size()) - 1; }
  double reflectance() const;
};

/// Throws DomainError on an inconsistent spec (empty alphas, T outside (0,1),
/// skip index outside 1..N).
void validate(const ChainSpec& spec);

inline constexpr double kTailTolerance = 1e-10;
inline constexpr double kConvergenceTolerance = 1e-8;

/// Runs the chain at a fixed cutoff. Throws CutoffInsufficient when the
/// relative population above cutoff/2 exceeds kTailTolerance after any step.
/// The result keeps its true (unnormalized) norm.
FockVector apply_chain(const ChainSpec& spec, int cutoff);

/// 4 (N + max|alpha|^2 + 1).
int default_cutoff(const ChainSpec& spec);

struct ChainResult {
  FockVector state;
  int cutoff = 0;
};

/// With an explicit cutoff: apply_chain at that cutoff. Otherwise the default
/// cutoff is grown by 1.5x until the tail check passes and norm2 agrees with a
/// 1.5x-cutoff recomputation to kConvergenceTolerance (relative).
ChainResult apply_chain_converged(const ChainSpec& spec, std::optional<int> cutoff = std::nullopt);

}  // namespace tsi

#endif  // TSI_FOCK_ENGINE_HPP_
