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

#ifndef TSI_IO_HPP_
#define TSI_IO_HPP_

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "tsi/engineering.hpp"
#include "tsi/fidelity.hpp"
#include "tsi/photon_stats.hpp"
#include "tsi/tsi_state.hpp"

namespace tsi::io {

/// Locale-independent shortest round-trip text for a double.
std::string format_double(double value);
/// Fixed notation with `decimals` digits after the point.
std::string format_fixed(double value, int decimals);

struct OutputOptions {
  bool polar = false;          // (magnitude, phase) columns instead of (re, im)
  bool include_meta = true;    // JSON "meta" block with a timestamp
};

std::string state_csv(const FockVector& state, const OutputOptions& options = {});
std::string state_json(const FockVector& state, const OutputOptions& options = {});
/// Parses the JSON written by state_json.
FockVector parse_state_json(const std::string& text);

inline constexpr const char* kSweepHeader = "N,p_even,p_odd,mean_n,delta_n,q,g2,dx1,dx2";
std::string sweep_csv(std::span<const StatsReport> reports);

std::string husimi_csv(const HusimiGrid& grid);

/// Magnitude/phase pairs rounded to 3 decimals, as printed in the tables.
std::string plan_json(const EngineeringPlan& plan, const OutputOptions& options = {});
std::string plan_table(const EngineeringPlan& plan);

std::string fidelity_csv(std::span<const FidelityReport> reports);
std::string fidelity_json(std::span<const FidelityReport> reports, const OutputOptions& options = {});

/// Writes to a sibling temporary file and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace tsi::io

#endif  // TSI_IO_HPP_
