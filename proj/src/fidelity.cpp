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

#include "tsi/fidelity.hpp"

#include <cmath>

#include "tsi/errors.hpp"

namespace tsi {
namespace {

void check_eta(double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) throw DomainError("detector efficiency eta must be in (0,1]");
}

struct Branches {
  std::vector<double> norms;
  std::vector<double> overlaps;
};

Branches measure_branches(const std::vector<FockVector>& chis) {
  Branches b;
  const double n0 = chis.front().norm2();
  if (!(n0 > 0.0)) throw NormalizationError("ideal branch has zero norm");
  for (const FockVector& chi : chis) {
    b.norms.push_back(chi.norm2());
    // |<Psi|chi>|^2 with Psi = chi_0 / ||chi_0||
    b.overlaps.push_back(std::norm(overlap(chis.front(), chi)) / n0);
  }
  return b;
}

FidelityReport make_report(const Branches& b, double eta) {
  FidelityReport r;
  r.eta = eta;
  r.fidelity = fidelity_from_branches(b.norms, b.overlaps, eta);
  r.branch_norms = b.norms;
  r.branch_overlaps = b.overlaps;
  r.outside_model_regime = eta < kModelValidityEta;
  return r;
}

}  // namespace

std::vector<FockVector> loss_branches(const EngineeringPlan& plan, std::optional<int> cutoff) {
  // All branches share one cutoff so they live in the same space.
  const ChainResult ideal = success_chain(plan, cutoff);
  std::vector<FockVector> out;
  out.reserve(static_cast<std::size_t>(plan.n()) + 1);
  out.push_back(ideal.state);
  for (int k = 1; k <= plan.n(); ++k) {
    ChainSpec spec = plan.chain();
    spec.skip_index = k;
    out.push_back(apply_chain_converged(spec, ideal.cutoff).state);
  }
  return out;
}

double fidelity_from_branches(std::span<const double> norms, std::span<const double> overlaps,
                              double eta) {
  check_eta(eta);
  const double w = 1.0 - eta;
  double num = norms[0];
  double den = norms[0];
  for (std::size_t k = 1; k < norms.size(); ++k) {
    num += w * overlaps[k];
    den += w * norms[k];
  }
  return num / den;
}

FidelityReport fidelity(const EngineeringPlan& plan, double eta, std::optional<int> cutoff) {
  check_eta(eta);
  return make_report(measure_branches(loss_branches(plan, cutoff)), eta);
}

std::vector<FidelityReport> fidelity_sweep(const EngineeringPlan& plan, std::span<const double> etas,
                                           std::optional<int> cutoff) {
  for (double eta : etas) check_eta(eta);
  const Branches b = measure_branches(loss_branches(plan, cutoff));
  std::vector<FidelityReport> out;
  out.reserve(etas.size());
  for (double eta : etas) out.push_back(make_report(b, eta));
  return out;
}

double fidelity_slope_at_unit_efficiency(const FidelityReport& report) {
  double overlaps = 0.0;
  double norms = 0.0;
  for (std::size_t k = 1; k < report.branch_norms.size(); ++k) {
    overlaps += report.branch_overlaps[k];
    norms += report.branch_norms[k];
  }
  return (overlaps - norms) / report.branch_norms[0];
}

}  // namespace tsi
