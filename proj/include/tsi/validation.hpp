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

#ifndef TSI_VALIDATION_HPP_
#define TSI_VALIDATION_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tsi/map_orbits.hpp"

namespace tsi::validation {

/// (magnitude, phase) as printed in the reference tables.
struct Polar {
  double magnitude = 0.0;
  double phase = 0.0;

  Complex value() const { return std::polar(magnitude, phase); }
};

/// One of the four published N = 5 generation setups.
struct ReferenceConfiguration {
  std::string name;
  MapSpec map;
  bool doubling_family = false;
  double transmittance = 0.0;
  std::vector<Polar> betas;   // printed root order
  std::vector<Polar> alphas;  // alpha_1 .. alpha_6
  double success_prob = 0.0;
};

const std::vector<ReferenceConfiguration>& reference_configurations();

inline constexpr int kReferenceN = 5;
inline constexpr std::array<double, 3> kReferenceEtas = {0.99, 0.95, 0.90};
inline constexpr std::array<double, 3> kDoublingFidelities = {0.9983, 0.9943, 0.9909};
inline constexpr std::array<double, 3> kLogisticFidelities = {0.9986, 0.9944, 0.9911};
inline constexpr double kReferenceOptimalT = 0.878;

inline constexpr double kRootTolerance = 2e-3;
inline constexpr double kAlphaTolerance = 2e-2;
inline constexpr double kProbabilityTolerance = 5e-4;
inline constexpr double kTransmittanceTolerance = 0.02;
inline constexpr double kFidelityTolerance = 2e-3;

struct CriterionInfo {
  int id = 0;
  std::string title;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;  // per-item deltas
};

struct ValidationOptions {
  /// Replaces every configuration's transmittance (negative testing).
  std::optional<double> transmittance_override;
  std::optional<int> cutoff;
  /// Restrict to these criterion ids; all when empty.
  std::vector<int> only;
};

std::vector<CriterionInfo> list_criteria();
std::vector<CriterionResult> run_validation(const ValidationOptions& options = {});

}  // namespace tsi::validation

#endif  // TSI_VALIDATION_HPP_
