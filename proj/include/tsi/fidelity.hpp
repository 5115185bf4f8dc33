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

#ifndef TSI_FIDELITY_HPP_
#define TSI_FIDELITY_HPP_

#include <optional>
#include <span>
#include <vector>

#include "tsi/engineering.hpp"

namespace tsi {

/// Detector quantum efficiency; loss branches are kept to first order (one
/// absorption at a time), each weighted by <L L^dag> = 1 - eta.
struct LossModel {
  double eta = 1.0;

  double branch_weight() const { return 1.0 - eta; }
};

inline constexpr double kModelValidityEta = 0.9;

struct FidelityReport {
  double eta = 1.0;
  double fidelity = 1.0;
  std::vector<double> branch_norms;     // ||chi_k||^2, k = 0..N
  std::vector<double> branch_overlaps;  // |<Psi|chi_k>|^2, Psi = chi_0/||chi_0||
  /// eta below the high-efficiency regime the first-order model assumes.
  bool outside_model_regime = false;
};

/// chi_0 is the ideal chain; chi_k (k = 1..N) has its k-th a^dag replaced by
/// the identity and carries R^{N-1}. All unnormalized.
std::vector<FockVector> loss_branches(const EngineeringPlan& plan,
                                      std::optional<int> cutoff = std::nullopt);

FidelityReport fidelity(const EngineeringPlan& plan, double eta,
                        std::optional<int> cutoff = std::nullopt);

/// Branches are computed once and reused for every eta.
std::vector<FidelityReport> fidelity_sweep(const EngineeringPlan& plan, std::span<const double> etas,
                                           std::optional<int> cutoff = std::nullopt);

/// F from precomputed branch norms and overlaps.
double fidelity_from_branches(std::span<const double> norms, std::span<const double> overlaps,
                              double eta);

/// dF/d(1-eta) at eta = 1: [Sum_k overlap_k - Sum_k norm_k] / norm_0, k >= 1.
double fidelity_slope_at_unit_efficiency(const FidelityReport& report);

}  // namespace tsi

#endif  // TSI_FIDELITY_HPP_
