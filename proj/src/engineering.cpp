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

#include "tsi/engineering.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tsi/errors.hpp"

namespace tsi {
namespace {

// Horner evaluation of p and p'.
void evaluate(std::span<const Complex> c, Complex x, Complex& p, Complex& dp) {
  p = c.back();
  dp = 0.0;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * x + p;
    p = p * x + c[i];
  }
}

Complex horner(std::span<const Complex> c, Complex x) {
  Complex p = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) p = p * x + c[i];
  return p;
}

bool residual_ok(std::span<const Complex> c, Complex x, double tol) {
  double scale = 0.0;
  double power = 1.0;
  const double ax = std::abs(x);
  for (const Complex& ci : c) {
    scale += std::abs(ci) * power;
    power *= ax;
  }
  return std::abs(horner(c, x)) <= tol * scale;
}

bool aberth(std::span<const Complex> monic, int max_iterations, double tolerance,
            std::vector<Complex>& z) {
  const std::size_t m = monic.size() - 1;
  const double radius = std::pow(std::abs(monic.front()), 1.0 / static_cast<double>(m));
  const double r0 = radius > 0.0 ? radius : 1.0;
  z.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    // Perturbed circle: a phase offset and a small radial spread keep the
    // starting points off any symmetry axis of real polynomials.
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m) + 0.4;
    const double r = r0 * (1.0 + 0.01 * static_cast<double>(k) / static_cast<double>(m));
    z[k] = std::polar(r, theta);
  }
  for (int iter = 0; iter < max_iterations; ++iter) {
    double max_step = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      Complex p, dp;
      evaluate(monic, z[k], p, dp);
      if (p == Complex{}) continue;
      Complex repulsion{};
      for (std::size_t j = 0; j < m; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      const Complex newton = p / dp;
      const Complex step = newton / (1.0 - newton * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return false;
      z[k] -= step;
      max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[k])));
    }
    if (max_step < tolerance) return true;
  }
  return false;
}

std::vector<Complex> companion_roots(std::span<const Complex> monic) {
  const Eigen::Index m = static_cast<Eigen::Index>(monic.size()) - 1;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(m, m);
  for (Eigen::Index i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < m; ++i) companion(i, m - 1) = -monic[static_cast<std::size_t>(i)];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw RootFinderError("companion eigenvalue solver failed");
  const auto& ev = solver.eigenvalues();
  return std::vector<Complex>(ev.data(), ev.data() + ev.size());
}

double inv_sqrt_factorial(int n) { return std::exp(-0.5 * std::lgamma(n + 1.0)); }

}  // namespace

std::vector<Complex> characteristic_polynomial(const FockVector& state) {
  std::vector<Complex> p(state.size());
  for (std::size_t n = 0; n < state.size(); ++n) p[n] = state[n] * inv_sqrt_factorial(static_cast<int>(n));
  return p;
}

std::vector<Complex> char_poly_roots(std::span<const Complex> coefficients,
                                     const RootFinderOptions& options) {
  if (coefficients.size() < 2) throw DomainError("char_poly_roots: degree must be at least 1");
  for (const Complex& c : coefficients) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("char_poly_roots: non-finite coefficient");
    }
  }
  if (coefficients.back() == Complex{}) {
    throw DegenerateDegree("char_poly_roots: leading coefficient is zero; reduce N");
  }

  // Exact zero roots come off the bottom.
  std::size_t zeros = 0;
  while (coefficients[zeros] == Complex{}) ++zeros;
  std::vector<Complex> roots(zeros, Complex{});
  const std::span<const Complex> reduced = coefficients.subspan(zeros);
  if (reduced.size() == 1) return roots;

  std::vector<Complex> monic(reduced.begin(), reduced.end());
  const Complex lead = monic.back();
  for (Complex& c : monic) c /= lead;

  std::vector<Complex> found;
  bool ok = aberth(monic, options.max_iterations, options.tolerance, found);
  if (ok) {
    ok = std::all_of(found.begin(), found.end(),
                     [&](Complex x) { return residual_ok(reduced, x, options.residual_tolerance); });
  }
  if (!ok) {
    found = companion_roots(monic);
    for (const Complex& x : found) {
      if (!residual_ok(reduced, x, options.residual_tolerance)) {
        throw RootFinderError("root finder did not converge: residual " +
                              std::to_string(std::abs(horner(reduced, x))) + " at |x| = " +
                              std::to_string(std::abs(x)));
      }
    }
  }
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

void sort_canonical(std::vector<Complex>& betas) {
  std::stable_sort(betas.begin(), betas.end(), [](Complex a, Complex b) {
    const double ma = std::abs(a);
    const double mb = std::abs(b);
    if (std::abs(ma - mb) > 1e-9 * std::max(1.0, std::max(ma, mb))) return ma > mb;
    return std::arg(a) < std::arg(b);
  });
}

std::vector<Complex> order_like(std::span<const Complex> betas, std::span<const Complex> reference) {
  if (betas.size() != reference.size()) {
    throw DomainError("root order has " + std::to_string(reference.size()) + " entries, expected " +
                      std::to_string(betas.size()));
  }
  std::vector<Complex> pool(betas.begin(), betas.end());
  std::vector<Complex> out;
  out.reserve(pool.size());
  for (const Complex& ref : reference) {
    auto best = std::min_element(pool.begin(), pool.end(), [&](Complex a, Complex b) {
      return std::abs(a - ref) < std::abs(b - ref);
    });
    out.push_back(*best);
    pool.erase(best);
  }
  return out;
}

std::vector<Complex> alphas_from_roots(std::span<const Complex> betas, double transmittance) {
  const int n = static_cast<int>(betas.size());
  if (n < 1) throw DomainError("alphas_from_roots: need at least one root");
  if (!(transmittance > 0.0 && transmittance < 1.0)) {
    throw DomainError("alphas_from_roots: transmittance must be in (0,1)");
  }
  // alpha[k] holds alpha_k, index 0 unused.
  std::vector<Complex> alpha(static_cast<std::size_t>(n) + 2);
  for (int k = 2; k <= n; ++k) {
    alpha[k] = std::pow(transmittance, n - k + 1) * (betas[k - 2] - betas[k - 1]);
  }
  alpha[n + 1] = betas[n - 1];
  Complex sum{};
  for (int l = 1; l <= n; ++l) sum += std::pow(transmittance, -l) * alpha[l + 1];
  alpha[1] = -sum;
  return std::vector<Complex>(alpha.begin() + 1, alpha.end());
}

std::vector<Complex> vieta_reconstruct(std::span<const Complex> betas, Complex leading) {
  const int n = static_cast<int>(betas.size());
  // Monic Prod (x - beta_k^*), ascending powers.
  std::vector<Complex> e{1.0};
  for (const Complex& b : betas) {
    std::vector<Complex> next(e.size() + 1, Complex{});
    for (std::size_t i = 0; i < e.size(); ++i) {
      next[i + 1] += e[i];
      next[i] -= std::conj(b) * e[i];
    }
    e = std::move(next);
  }
  // (a^dag)^k |0> = sqrt(k!) |k>; overall factor c_N / sqrt(N!).
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    c[k] = leading * e[k] * std::exp(0.5 * (std::lgamma(k + 1.0) - std::lgamma(n + 1.0)));
  }
  return c;
}

EngineeringPlan build_plan(const FockVector& state, double transmittance, const PlanOptions& options) {
  if (state.dim() < 1) throw DomainError("build_plan: need N >= 1");
  if (!(transmittance > 0.0 && transmittance < 1.0)) {
    throw DomainError("build_plan: transmittance must be in (0,1)");
  }
  EngineeringPlan plan;
  plan.coefficients.assign(state.amplitudes().begin(), state.amplitudes().end());
  const std::vector<Complex> poly = characteristic_polynomial(state);
  std::vector<Complex> roots = char_poly_roots(poly);
  plan.betas.reserve(roots.size());
  for (const Complex& r : roots) plan.betas.push_back(std::conj(r));
  if (options.root_order) {
    plan.betas = order_like(plan.betas, *options.root_order);
  } else {
    sort_canonical(plan.betas);
  }
  plan.transmittance = transmittance;
  plan.alphas = alphas_from_roots(plan.betas, transmittance);
  const ChainResult chain = apply_chain_converged(plan.chain(), options.cutoff);
  plan.success_prob = chain.state.norm2();
  plan.cutoff_used = chain.cutoff;
  return plan;
}

ChainResult success_chain(const EngineeringPlan& plan, std::optional<int> cutoff) {
  return apply_chain_converged(plan.chain(), cutoff);
}

double success_probability(const EngineeringPlan& plan, std::optional<int> cutoff) {
  return success_chain(plan, cutoff).state.norm2();
}

double verify_equivalence(const EngineeringPlan& plan, const FockVector& state,
                          std::optional<int> cutoff) {
  const ChainResult chain = success_chain(plan, cutoff);
  const double chain_norm = chain.state.norm2();
  const double state_norm = state.norm2();
  if (!(chain_norm > 0.0) || !(state_norm > 0.0)) return 0.0;
  return std::norm(overlap(state, chain.state)) / (chain_norm * state_norm);
}

TransmittanceOptimum optimize_transmittance(const FockVector& state, const TransmittanceSearch& search,
                                            const PlanOptions& options) {
  if (search.grid < 16) throw DomainError("optimize_transmittance: grid must be >= 16");
  if (!(search.t_lo > 0.0 && search.t_hi < 1.0 && search.t_lo < search.t_hi)) {
    throw DomainError("optimize_transmittance: range must lie inside (0,1)");
  }
  if (!(search.refine_tol > 0.0)) throw DomainError("optimize_transmittance: refine_tol must be positive");

  // Roots do not depend on T; only the alphas and the chain do.
  EngineeringPlan base = build_plan(state, 0.5 * (search.t_lo + search.t_hi), options);
  auto probability = [&](double t) {
    EngineeringPlan p = base;
    p.transmittance = t;
    p.alphas = alphas_from_roots(p.betas, t);
    return success_probability(p, options.cutoff);
  };

  const double step = (search.t_hi - search.t_lo) / static_cast<double>(search.grid - 1);
  std::vector<double> values(static_cast<std::size_t>(search.grid));
  for (int i = 0; i < search.grid; ++i) values[i] = probability(search.t_lo + step * i);
  const auto best = std::max_element(values.begin(), values.end());
  const auto worst = std::min_element(values.begin(), values.end());
  const int best_i = static_cast<int>(best - values.begin());

  TransmittanceOptimum out;
  out.degenerate = !(*best > 0.0) || (*best - *worst) / *best < 1e-12;
  out.t_star = search.t_lo + step * best_i;
  out.p_star = *best;
  if (out.degenerate) return out;

  // Golden section on the bracket around the best grid point.
  double lo = search.t_lo + step * std::max(0, best_i - 1);
  double hi = search.t_lo + step * std::min(search.grid - 1, best_i + 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = probability(x1);
  double f2 = probability(x2);
  while (hi - lo > search.refine_tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = probability(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = probability(x1);
    }
  }
  const double t_mid = 0.5 * (lo + hi);
  const double p_mid = probability(t_mid);
  if (p_mid >= out.p_star) {
    out.t_star = t_mid;
    out.p_star = p_mid;
  }
  return out;
}

}  // namespace tsi
