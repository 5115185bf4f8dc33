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

#ifndef TSI_ERRORS_HPP_
#define TSI_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tsi {

/// A precondition on an input was violated (bad seed, T outside (0,1), ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The orbit (or vector) to be normalized has zero norm.
class NormalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A statistic divides by <n> = 0 (vacuum-only states).
class UndefinedStatistic : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Population above cutoff/2 exceeded the allowed tail mass.
class CutoffInsufficient : public std::runtime_error {
 public:
  CutoffInsufficient(const std::string& what, int cutoff, double tail_mass)
      : std::runtime_error(what), cutoff_(cutoff), tail_mass_(tail_mass) {}
  int cutoff() const { return cutoff_; }
  double tail_mass() const { return tail_mass_; }

 private:
  int cutoff_;
  double tail_mass_;
};

/// Leading coefficient vanished; the caller has to reduce the degree.
class DegenerateDegree : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class RootFinderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tsi

#endif  // TSI_ERRORS_HPP_
