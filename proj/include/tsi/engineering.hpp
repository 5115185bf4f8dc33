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

#ifndef TSI_ENGINEERING_HPP_
#define TSI_ENGINEERING_HPP_

#include <optional>
#include <span>
#include <vector>

#include "tsi/fock_engine.hpp"
#include "tsi/tsi_state.hpp"

namespace tsi {

/// Coefficients p_n = c_n / sqrt(n!) of the polynomial whose roots factor
/// the state:  Sum c_n |n> = c_N/sqrt(N!) Prod_k (a^dag - beta_k^*) |0>,
/// i.e. the roots of Sum p_n x^n are the beta_k^*.
std::vector<Complex> characteristic_polynomial(const FockVector& state);

struct RootFinderOptions {
  int max_iterations = 200;
  double tolerance = 1e-12;
  double residual_tolerance = 1e-9;
};

/// All roots (with multiplicity) of Sum_n coefficients[n] x^n.
///
/// Aberth-Ehrlich iteration on the monic polynomial, started on a perturbed
/// circle of radius |c_0/c_N|^(1/N); companion-matrix eigenvalues if it does
/// not converge. Every root is checked against the backward-error residual
/// |p(x)| <= residual_tolerance * Sum |c_n| |x|^n.
std::vector<Complex> char_poly_roots(std::span<const Complex> coefficients,
                                     const RootFinderOptions& options = {});

/// Descending |beta|, ties (to 1e-9) broken by ascending phase.
void sort_canonical(std::vector<Complex>& betas);

/// Reorders `betas` to follow `reference` by greedy nearest matching.
std::vector<Complex> order_like(std::span<const Complex> betas, std::span<const Complex> reference);

/// alpha_k = T^{N-k+1} (beta_{k-1} - beta_k) for k = 2..N, alpha_{N+1} = beta_N,
/// alpha_1 = -Sum_{l=1}^{N} T^{-l} alpha_{l+1}.
std::vector<Complex> alphas_from_roots(std::span<const Complex> betas, double transmittance);

/// c_N/sqrt(N!) Prod (a^dag - beta_n^*) |0>, expanded through elementary
/// symmetric polynomials. Returns c_0..c_N.
std::vector<Complex> vieta_reconstruct(std::span<const Complex> betas, Complex leading);

struct EngineeringPlan {
  std::vector<Complex> coefficients;  // target amplitudes c_0..c_N
  std::vector<Complex> betas;         // beta_1..beta_N, in the order used
  double transmittance = 0.0;
  std::vector<Complex> alphas;  // alpha_1..alpha_{N+1}
  double success_prob = 0.0;
  int cutoff_used = 0;

  int n() const { return static_cast<int>(betas.size()); }
  ChainSpec chain() const { return {alphas, transmittance, std::nullopt}; }
};

struct PlanOptions {
  /// Reference betas fixing the order; canonical order when absent.
  std::optional<std::vector<Complex>> root_order;
  std::optional<int> cutoff;
};

/// roots -> betas (conjugated roots) -> alphas -> success probability.
/// Throws DegenerateDegree when c_N = 0 and DomainError when N = 0.
EngineeringPlan build_plan(const FockVector& state, double transmittance,
                           const PlanOptions& options = {});

/// Squared norm of the chain output; also reports the cutoff it converged at.
ChainResult success_chain(const EngineeringPlan& plan, std::optional<int> cutoff = std::nullopt);
double success_probability(const EngineeringPlan& plan, std::optional<int> cutoff = std::nullopt);

/// |<state|chain>|^2 / norm2(chain); 1 for a correct plan.
double verify_equivalence(const EngineeringPlan& plan, const FockVector& state,
                          std::optional<int> cutoff = std::nullopt);

struct TransmittanceSearch {
  double t_lo = 0.75;
  double t_hi = 0.99;
  int grid = 64;
  double refine_tol = 1e-5;
};

struct TransmittanceOptimum {
  double t_star = 0.0;
  double p_star = 0.0;
  /// Relative variation of the grid below 1e-12.
  bool degenerate = false;
};

/// Grid scan of the success probability over T, then golden-section
/// refinement around the best grid point.
TransmittanceOptimum optimize_transmittance(const FockVector& state,
                                            const TransmittanceSearch& search = {},
                                            const PlanOptions& options = {});

}  // namespace tsi

#endif  // TSI_ENGINEERING_HPP_
