// Copyright 2026 The cohread Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cohread/solver.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cohread/random.h"

namespace cohread {
namespace {

constexpr double kMinDisplacement = 1e-12;

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double d : v) s += d * d;
  return std::sqrt(s);
}

bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double d) { return std::isfinite(d); });
}

// Rebuilds a Hermitian matrix from eigenvectors and new eigenvalues.
ComplexMatrix assemble_spectral(const HermitianEigen& eig, std::span<const double> values) {
  const std::size_t n = eig.vectors.dim();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (values[k] == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = values[k] * eig.vectors(i, k);
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  return out;
}

// The solver works in u = (x, sqrt(2) y), in which the Euclidean norm equals
// the Frobenius norm of the reconstructed matrix. Projection onto density
// matrices is then an exact Euclidean projection.
struct ScaledCoordinates {
  std::size_t dim;

  RealVector to_u(const StateDecomposition& d) const {
    RealVector u(d.x);
    for (double c : d.y) u.push_back(std::numbers::sqrt2 * c);
    return u;
  }
  StateDecomposition from_u(std::span<const double> u) const {
    StateDecomposition d{RealVector(u.begin(), u.begin() + dim),
                         RealVector(u.begin() + dim, u.end())};
    for (double& c : d.y) c /= std::numbers::sqrt2;
    return d;
  }
};

}  // namespace

RealMatrix assemble_B(const ReadoutModel& model) {
  const std::size_t n = model.dim();
  const std::size_t m = model.C().cols();
  RealMatrix b(n, n + m);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) b(k, l) = model.A()(k, l);
    for (std::size_t j = 0; j < m; ++j) b(k, n + j) = model.C()(k, j);
  }
  return b;
}

MitigationProblem::MitigationProblem(ReadoutModel m, RealVector z)
    : model(std::move(m)), z_observed(std::move(z)) {
  if (z_observed.size() != model.dim()) {
    throw std::invalid_argument("observed distribution has " +
                                std::to_string(z_observed.size()) +
                                " entries, model expects " + std::to_string(model.dim()));
  }
  if (!all_finite(z_observed)) throw std::invalid_argument("observed distribution is not finite");
}

double gram_spectral_bound(const RealMatrix& m, std::uint64_t seed, int max_iterations,
                           double tol) {
  Rng rng(seed);
  RealVector v(m.cols());
  for (double& d : v) d = rng.normal();
  double norm = norm2(v);
  if (norm == 0.0) return 0.0;
  for (double& d : v) d /= norm;

  const RealMatrix mt = m.transpose();
  double estimate = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    RealVector w = mt * std::span<const double>(m * std::span<const double>(v));
    const double next = norm2(w);
    if (next == 0.0) return 0.0;
    for (double& d : w) d /= next;
    v = std::move(w);
    const bool done = std::abs(next - estimate) <= tol * next;
    estimate = next;
    if (done) break;
  }
  return estimate;
}

StateDecomposition project_to_density_set(std::span<const double> x,
                                          std::span<const double> y) {
  StateDecomposition d{RealVector(x.begin(), x.end()), RealVector(y.begin(), y.end())};
  const auto eig = hermitian_eigen(reconstruct(d));
  RealVector values = eig.values;
  double total = 0.0;
  for (double& v : values) {
    v = std::max(v, 0.0);
    total += v;
  }
  if (!(total > 0.0)) {
    throw std::domain_error("projection: no positive eigenvalue survives clipping");
  }
  for (double& v : values) v /= total;
  return decompose_hermitian(assemble_spectral(eig, values));
}

StateDecomposition nearest_density_matrix(const StateDecomposition& d) {
  const auto eig = hermitian_eigen(reconstruct(d));
  const RealVector values = project_to_simplex(eig.values);
  return decompose_hermitian(assemble_spectral(eig, values));
}

MitigationResult mitigate(const MitigationProblem& problem, const SolverOptions& options) {
  if (options.max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
  if (!(options.residual_tol > 0.0)) throw std::invalid_argument("residual_tol must be > 0");
  if (options.step_size && !(*options.step_size > 0.0)) {
    throw std::invalid_argument("step_size must be > 0");
  }

  const std::size_t n = problem.model.dim();
  const ScaledCoordinates coords{n};
  const std::span<const double> z = problem.z_observed;

  // B in scaled coordinates: coherence columns divided by sqrt(2).
  RealMatrix b = assemble_B(problem.model);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = n; j < b.cols(); ++j) b(k, j) /= std::numbers::sqrt2;
  const RealMatrix bt = b.transpose();

  double step = 0.0;
  if (options.step_size) {
    step = *options.step_size;
  } else {
    const double lipschitz = gram_spectral_bound(b, options.seed);
    if (!(lipschitz > 0.0)) throw std::domain_error("mitigate: B is identically zero");
    step = 1.0 / lipschitz;
  }

  auto residual_of = [&](std::span<const double> u) {
    RealVector r = b * u;
    for (std::size_t k = 0; k < n; ++k) r[k] -= z[k];
    return r;
  };

  StateDecomposition start{RealVector(n, 1.0 / static_cast<double>(n)),
                           RealVector(coherence_length(n), 0.0)};
  RealVector u = coords.to_u(start);
  RealVector r = residual_of(u);
  double residual = norm2(r);

  MitigationResult result;
  if (options.record_history) result.objective_history.push_back(0.5 * residual * residual);
  RealVector best_u = u;
  double best_residual = residual;

  int iterations = 0;
  bool converged = residual <= options.residual_tol;
  while (!converged && iterations < options.max_iterations) {
    ++iterations;
    const RealVector grad = bt * std::span<const double>(r);
    RealVector trial(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) trial[i] = u[i] - step * grad[i];
    if (!all_finite(trial)) throw std::runtime_error("mitigate: non-finite gradient step");

    RealVector next = coords.to_u(nearest_density_matrix(coords.from_u(trial)));
    double displacement = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double d = next[i] - u[i];
      displacement += d * d;
    }
    displacement = std::sqrt(displacement);

    u = std::move(next);
    r = residual_of(u);
    residual = norm2(r);
    if (!std::isfinite(residual)) throw std::runtime_error("mitigate: non-finite residual");
    if (options.record_history) result.objective_history.push_back(0.5 * residual * residual);
    if (residual < best_residual) {
      best_residual = residual;
      best_u = u;
    }
    converged = residual <= options.residual_tol || displacement < kMinDisplacement;
  }

  const StateDecomposition best = coords.from_u(best_u);
  result.x_hat = best.x;
  result.y_hat = best.y;
  result.v_hat = best.x;
  result.v_hat.insert(result.v_hat.end(), best.y.begin(), best.y.end());
  result.residual = best_residual;
  result.iterations = iterations;
  result.converged = converged;
  return result;
}

RealVector classical_invert(const ReadoutModel& model, std::span<const double> z) {
  if (z.size() != model.dim()) {
    throw std::invalid_argument("classical_invert: expected " + std::to_string(model.dim()) +
                                " probabilities, got " + std::to_string(z.size()));
  }
  return project_to_simplex(solve_linear(model.A(), z));
}

}  // namespace cohread
