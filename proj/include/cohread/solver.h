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

#ifndef COHREAD_SOLVER_H_
#define COHREAD_SOLVER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "cohread/linalg.h"
#include "cohread/readout_model.h"
#include "cohread/state.h"

namespace cohread {

/// B = [A C], so that z = B v with v = [x; y].
RealMatrix assemble_B(const ReadoutModel& model);

struct MitigationProblem {
  MitigationProblem(ReadoutModel model, RealVector z_observed);

  ReadoutModel model;
  RealVector z_observed;
};

enum class ResidualNorm { kEuclidean };

/// Only least squares is implemented; sparsity-seeking objectives would be
/// added here.
enum class Objective { kLeastSquares };

struct SolverOptions {
  int max_iterations = 5000;
  /// Fixed gradient step. Defaults to 1/L with L the largest eigenvalue of
  /// the Gram matrix of the solver's coordinates.
  std::optional<double> step_size;
  double residual_tol = 1e-9;
  ResidualNorm norm = ResidualNorm::kEuclidean;
  Objective objective = Objective::kLeastSquares;
  /// Seeds the power iteration start vector.
  std::uint64_t seed = 0;
  /// Keep 0.5 ||z - B v||^2 for every accepted iterate.
  bool record_history = false;
};

struct MitigationResult {
  RealVector v_hat;
  RealVector x_hat;
  RealVector y_hat;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
  RealVector objective_history;
};

/// Projected gradient descent on 0.5 ||z - B v||^2 over the set of density
/// matrices, starting from the maximally mixed state. Returns the best
/// iterate; `converged` is true when the residual drops to `residual_tol`
/// or a step moves less than 1e-12. Throws std::runtime_error on non-finite
/// arithmetic.
MitigationResult mitigate(const MitigationProblem& problem,
                          const SolverOptions& options = {});

/// reconstruct -> eigendecompose -> clip negative eigenvalues -> rescale to
/// unit trace -> decompose. Throws std::domain_error if nothing survives the
/// clipping.
StateDecomposition project_to_density_set(std::span<const double> x,
                                          std::span<const double> y);

/// Frobenius-nearest density matrix: eigenvalues are projected onto the
/// probability simplex. This is the projection `mitigate` iterates with.
StateDecomposition nearest_density_matrix(const StateDecomposition& d);

/// Solves A x = z and projects the result onto the probability simplex.
/// Throws std::domain_error if A is singular.
RealVector classical_invert(const ReadoutModel& model, std::span<const double> z);

/// Largest eigenvalue of M^T M by power iteration.
double gram_spectral_bound(const RealMatrix& m, std::uint64_t seed,
                           int max_iterations = 200, double tol = 1e-10);

}  // namespace cohread

#endif  // COHREAD_SOLVER_H_
