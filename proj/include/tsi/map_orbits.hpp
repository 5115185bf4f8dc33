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

#ifndef TSI_MAP_ORBITS_HPP_
#define TSI_MAP_ORBITS_HPP_

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tsi {

using Complex = std::complex<double>;

enum class MapKind { kDoubling, kLogistic, kQuadratic, kSine, kExponential };

std::string_view to_string(MapKind kind);
/// Accepts the lower-case names used on the command line ("doubling", ...).
std::optional<MapKind> parse_map_kind(std::string_view name);

/// Exact seed p/q for the doubling map; iterates as p <- 2p mod q.
struct RationalSeed {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

/// An iterated generating function together with its seed.
///
/// The doubling and logistic maps are real maps. Quadratic, sine and
/// exponential maps are evaluated in complex arithmetic. When `exact_seed`
/// is set (doubling only) orbits are produced by exact integer iteration,
/// which avoids the one-bit-per-step loss of `2x mod 1` in floating point.
struct MapSpec {
  MapKind kind = MapKind::kDoubling;
  double mu = 0.0;
  Complex seed{0.0, 0.0};
  std::optional<RationalSeed> exact_seed;

  static MapSpec doubling(double seed) { return {MapKind::kDoubling, 0.0, seed, std::nullopt}; }
  static MapSpec doubling_exact(std::uint64_t num, std::uint64_t den);
  static MapSpec logistic(double mu, double seed) { return {MapKind::kLogistic, mu, seed, std::nullopt}; }
};

/// Throws DomainError if the seed is inadmissible for the map kind.
void validate(const MapSpec& map);

/// One application of the map.
Complex iterate(const MapSpec& map, Complex x);

struct Orbit {
  std::vector<Complex> values;  // values[0] is the seed

  std::size_t size() const { return values.size(); }
  const Complex& operator[](std::size_t n) const { return values[n]; }
};

/// Seed followed by n_max iterates.
Orbit orbit(const MapSpec& map, int n_max);

struct EventualPeriod {
  int transient = 0;
  int period = 0;

  bool operator==(const EventualPeriod&) const = default;
};

inline constexpr double kDefaultPeriodTolerance = 1e-9;

/// Smallest period p <= max_period and, for it, the smallest transient t with
/// |v[n+p] - v[n]| < tol for every n >= t. At least one comparison has to back
/// the claim (t + p < orbit length).
std::optional<EventualPeriod> detect_eventual_period(
    const Orbit& orbit, double tol = kDefaultPeriodTolerance, int max_period = 50);

}  // namespace tsi

#endif  // TSI_MAP_ORBITS_HPP_
