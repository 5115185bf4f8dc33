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

#include "tsi/map_orbits.hpp"

#include <cmath>
#include <string>

#include "tsi/errors.hpp"

namespace tsi {
namespace {

bool is_finite(Complex x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }

bool is_real_map(MapKind kind) { return kind == MapKind::kDoubling || kind == MapKind::kLogistic; }

}  // namespace

std::string_view to_string(MapKind kind) {
  switch (kind) {
    case MapKind::kDoubling:
      return "doubling";
    case MapKind::kLogistic:
      return "logistic";
    case MapKind::kQuadratic:
      return "quadratic";
    case MapKind::kSine:
      return "sine";
    case MapKind::kExponential:
      return "exponential";
  }
  return "unknown";
}

std::optional<MapKind> parse_map_kind(std::string_view name) {
  for (MapKind kind : {MapKind::kDoubling, MapKind::kLogistic, MapKind::kQuadratic, MapKind::kSine,
                       MapKind::kExponential}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

MapSpec MapSpec::doubling_exact(std::uint64_t num, std::uint64_t den) {
  MapSpec spec;
  spec.kind = MapKind::kDoubling;
  spec.exact_seed = RationalSeed{num, den};
  spec.seed = den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  return spec;
}

void validate(const MapSpec& map) {
  if (!std::isfinite(map.mu)) throw DomainError("map parameter mu is not finite");
  if (map.exact_seed) {
    if (map.kind != MapKind::kDoubling) {
      throw DomainError("exact rational seeds are only supported for the doubling map");
    }
    // 2p must not overflow.
    if (map.exact_seed->den == 0 || map.exact_seed->den > (std::uint64_t{1} << 62)) {
      throw DomainError("rational seed denominator must be in [1, 2^62]");
    }
    if (map.exact_seed->num >= map.exact_seed->den) throw DomainError("seed out of [0,1)");
    return;
  }
  if (!is_finite(map.seed)) throw DomainError("seed is not finite");
  if (is_real_map(map.kind) && map.seed.imag() != 0.0) {
    throw DomainError(std::string(to_string(map.kind)) + " map requires a real seed");
  }
  if (map.kind == MapKind::kDoubling && (map.seed.real() < 0.0 || map.seed.real() >= 1.0)) {
    throw DomainError("seed out of [0,1)");
  }
}

Complex iterate(const MapSpec& map, Complex x) {
  if (!is_finite(x)) throw DomainError("iterate: argument is not finite");
  if (is_real_map(map.kind) && x.imag() != 0.0) {
    throw DomainError(std::string(to_string(map.kind)) + " map is real-only");
  }
  const double mu = map.mu;
  switch (map.kind) {
    case MapKind::kDoubling: {
      const double v = x.real();
      if (v < 0.0 || v >= 1.0) throw DomainError("doubling map argument out of [0,1)");
      const double y = 2.0 * v;
      return y >= 1.0 ? y - 1.0 : y;
    }
    case MapKind::kLogistic:
      return mu * x.real() * (1.0 - x.real());
    case MapKind::kQuadratic:
      return x * x + mu;
    case MapKind::kSine:
      return mu * std::sin(x);
    case MapKind::kExponential:
      return mu * std::exp(x);
  }
  throw DomainError("unknown map kind");
}

Orbit orbit(const MapSpec& map, int n_max) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  validate(map);
  Orbit out;
  out.values.reserve(static_cast<std::size_t>(n_max) + 1);

  if (map.exact_seed) {
    const auto [num0, den] = *map.exact_seed;
    std::uint64_t num = num0;
    const double dden = static_cast<double>(den);
    for (int n = 0; n <= n_max; ++n) {
      out.values.emplace_back(static_cast<double>(num) / dden, 0.0);
      num = (2 * num) % den;
    }
    return out;
  }

  out.values.push_back(map.seed);
  for (int n = 1; n <= n_max; ++n) {
    Complex next;
    try {
      next = iterate(map, out.values.back());
    } catch (const DomainError& e) {
      throw DomainError("orbit: iterate failed at index " + std::to_string(n) + ": " + e.what());
    }
    if (!is_finite(next)) {
      throw DomainError("orbit: non-finite iterate at index " + std::to_string(n));
    }
    out.values.push_back(next);
  }
  return out;
}

std::optional<EventualPeriod> detect_eventual_period(const Orbit& orbit, double tol,
                                                     int max_period) {
  if (!(tol > 0.0) || max_period < 1) return std::nullopt;
  const int len = static_cast<int>(orbit.size());
  for (int p = 1; p <= max_period && p < len; ++p) {
    // Smallest transient is one past the last mismatch.
    int t = 0;
    for (int n = len - 1 - p; n >= 0; --n) {
      if (std::abs(orbit[n + p] - orbit[n]) >= tol) {
        t = n + 1;
        break;
      }
    }
    if (t + p <= len - 1) return EventualPeriod{t, p};
  }
  return std::nullopt;
}

}  // namespace tsi
