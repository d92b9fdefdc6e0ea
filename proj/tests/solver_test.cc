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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gtest/gtest.h"

#include "cohread/povm.h"
#include "test_util.h"

namespace cohread {
namespace {

using testing::MatrixNear;
using testing::VectorNear;

ReadoutModel model_of(const KrausChannel& ch) { return extract(effective_povm(ch)); }

void expect_physical(const MitigationResult& r, double tol = 1e-8) {
  const auto m = reconstruct({r.x_hat, r.y_hat});
  EXPECT_NEAR(m.trace().real(), 1.0, tol);
  EXPECT_GE(min_eigenvalue_hermitian(m), -tol);
  for (double x : r.x_hat) EXPECT_GE(x, -tol);
  ASSERT_EQ(r.v_hat.size(), r.x_hat.size() + r.y_hat.size());
}

TEST(AssembleB, IdentityChannel) {
  const RealMatrix b = assemble_B(model_of(identity_channel(2)));
  ASSERT_EQ(b.rows(), 2u);
  ASSERT_EQ(b.cols(), 4u);
  const RealVector expected{1, 0, 0, 0, 0, 1, 0, 0};
  EXPECT_TRUE(VectorNear(b.data(), expected, 0.0));
}

TEST(AssembleB, RotationY) {
  const double theta = 0.8;
  const RealMatrix b = assemble_B(model_of(rotation_y(theta)));
  const double c2 = std::pow(std::cos(theta / 2), 2);
  const double s2 = std::pow(std::sin(theta / 2), 2);
  const double s = std::sin(theta);
  const RealVector expected{c2, s2, s, 0, s2, c2, -s, 0};
  EXPECT_TRUE(VectorNear(b.data(), expected, 1e-15));
}

TEST(AssembleB, ProductMatchesForward) {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t qubits = 1 + trial % 3;
    const auto m = model_of(random_channel(std::size_t{1} << qubits, 3, rng));
    const auto d = decompose(random_density(qubits, 10 + trial));
    RealVector v = d.x;
    v.insert(v.end(), d.y.begin(), d.y.end());
    EXPECT_TRUE(VectorNear(assemble_B(m) * std::span<const double>(v), forward(m, d), 1e-15));
  }
}

TEST(ProjectToDensitySet, IdempotentOnValidStates) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto d = decompose(random_density(1 + seed % 2, seed));
    const auto p = project_to_density_set(d.x, d.y);
    EXPECT_TRUE(VectorNear(p.x, d.x, 1e-12));
    EXPECT_TRUE(VectorNear(p.y, d.y, 1e-12));
  }
}

TEST(ProjectToDensitySet, ClipsNegativePopulation) {
  // diag(1.2, -0.2) -> clip -> diag(1.2, 0) -> renormalize -> diag(1, 0).
  const auto p = project_to_density_set(RealVector{1.2, -0.2}, RealVector{0.0, 0.0});
  EXPECT_TRUE(VectorNear(p.x, RealVector{1.0, 0.0}, 1e-15));
  EXPECT_TRUE(VectorNear(p.y, RealVector{0.0, 0.0}, 1e-15));
}

TEST(ProjectToDensitySet, ExcessCoherence) {
  // [[.5, .9], [.9, .5]] has eigenvalues 1.4 and -0.4; clipping leaves |+><+|.
  const auto p = project_to_density_set(RealVector{0.5, 0.5}, RealVector{0.9, 0.0});
  const auto m = reconstruct(p);
  EXPECT_GE(min_eigenvalue_hermitian(m), -1e-15);
  EXPECT_NEAR(m.trace().real(), 1.0, 1e-15);
  EXPECT_TRUE(VectorNear(p.y, RealVector{0.5, 0.0}, 1e-15));
}

TEST(ProjectToDensitySet, DegenerateInputThrows) {
  EXPECT_THROW(project_to_density_set(RealVector{-0.5, -0.5}, RealVector{0.0, 0.0}),
               std::domain_error);
}

TEST(ProjectToDensitySet, IdempotentOnArbitraryInput) {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = trial % 2 ? 4 : 2;
    RealVector x(n), y(coherence_length(n));
    for (double& v : x) v = rng.normal();
    x[0] = std::abs(x[0]) + 1.0;
    for (double& v : y) v = rng.normal();
    const auto once = project_to_density_set(x, y);
    const auto twice = project_to_density_set(once.x, once.y);
    EXPECT_TRUE(VectorNear(twice.x, once.x, 1e-12));
    EXPECT_TRUE(VectorNear(twice.y, once.y, 1e-12));
  }
}

TEST(NearestDensityMatrix, ProjectsOntoSet) {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = trial % 2 ? 4 : 2;
    StateDecomposition d{RealVector(n), RealVector(coherence_length(n))};
    for (double& v : d.x) v = rng.normal();
    for (double& v : d.y) v = rng.normal();
    const auto p = nearest_density_matrix(d);
    const auto m = reconstruct(p);
    EXPECT_NEAR(m.trace().real(), 1.0, 1e-12);
    EXPECT_GE(min_eigenvalue_hermitian(m), -1e-12);
    // Nearest point: no other density matrix is closer than p.
    const double dist = (reconstruct(d) - m).frobenius_norm();
    for (std::uint64_t s = 0; s < 5; ++s) {
      const auto other = random_density(qubits_for_dim(n), 900 + s).matrix();
      EXPECT_LE(dist, (reconstruct(d) - other).frobenius_norm() + 1e-12);
    }
  }
}

TEST(Mitigate, IdentityChannelPureState) {
  const MitigationProblem problem(model_of(identity_channel(2)), RealVector{1.0, 0.0});
  const auto r = mitigate(problem);
  EXPECT_TRUE(r.converged);
  EXPECT_TRUE(VectorNear(r.x_hat, RealVector{1.0, 0.0}, 1e-12));
  EXPECT_TRUE(VectorNear(r.y_hat, RealVector{0.0, 0.0}, 1e-12));
  expect_physical(r);
}

TEST(Mitigate, AmplitudeDampingRecoversPopulations) {
  const auto m = model_of(amplitude_damping(0.3));
  const RealVector x_true{0.25, 0.75};
  const RealVector z = classical_forward(m, x_true);
  const auto r = mitigate(MitigationProblem(m, z));
  EXPECT_TRUE(r.converged);
  EXPECT_TRUE(VectorNear(r.x_hat, x_true, 1e-6));
  EXPECT_TRUE(VectorNear(r.x_hat, classical_invert(m, z), 1e-6));
  expect_physical(r);
}

TEST(Mitigate, ConsistentProblemsReachSmallResidual) {
  Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t qubits = 1 + trial % 2;
    const auto m = model_of(random_channel(std::size_t{1} << qubits, 2 + trial % 3, rng));
    const RealVector z = forward(m, decompose(random_density(qubits, 123 + trial)));
    const auto r = mitigate(MitigationProblem(m, z));
    EXPECT_LE(r.residual, 1e-8) << "trial " << trial;
    EXPECT_TRUE(r.converged);
    expect_physical(r);
  }
}

TEST(Mitigate, ObjectiveIsMonotone) {
  Rng rng(78);
  SolverOptions opts;
  opts.record_history = true;
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t qubits = 1 + trial % 2;
    const auto m = model_of(random_channel(std::size_t{1} << qubits, 3, rng));
    // An inconsistent target keeps the projection active.
    RealVector z(m.dim());
    for (double& v : z) v = rng.uniform();
    const auto r = mitigate(MitigationProblem(m, z), opts);
    ASSERT_EQ(r.objective_history.size(), static_cast<std::size_t>(r.iterations) + 1);
    for (std::size_t i = 1; i < r.objective_history.size(); ++i) {
      EXPECT_LE(r.objective_history[i], r.objective_history[i - 1] * (1 + 1e-12) + 1e-300);
    }
    expect_physical(r);
  }
}

TEST(Mitigate, IterationLimitReportsNonConvergence) {
  const auto m = model_of(rotation_y(0.9));
  SolverOptions opts;
  opts.max_iterations = 1;
  opts.step_size = 1e-6;
  const auto r = mitigate(MitigationProblem(m, RealVector{0.9, 0.1}), opts);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 1);
  expect_physical(r);
}

TEST(Mitigate, DeterministicGivenSeed) {
  const auto m = model_of(tensor(rotation_y(0.3), amplitude_damping(0.2)));
  const RealVector z = forward(m, decompose(random_density(2, 5)));
  SolverOptions opts;
  opts.seed = 17;
  const auto a = mitigate(MitigationProblem(m, z), opts);
  const auto b = mitigate(MitigationProblem(m, z), opts);
  EXPECT_EQ(a.v_hat, b.v_hat);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Mitigate, RejectsBadOptionsAndInputs) {
  const auto m = model_of(identity_channel(2));
  SolverOptions opts;
  opts.max_iterations = 0;
  EXPECT_THROW(mitigate(MitigationProblem(m, RealVector{1.0, 0.0}), opts), std::invalid_argument);
  EXPECT_THROW(MitigationProblem(m, RealVector{1.0}), std::invalid_argument);
  EXPECT_THROW(MitigationProblem(m, RealVector{NAN, 0.0}), std::invalid_argument);
  SolverOptions huge;
  huge.step_size = 1e308;
  EXPECT_THROW(mitigate(MitigationProblem(m, RealVector{1e10, 0.0}), huge), std::runtime_error);
}

TEST(ClassicalInvert, KnownValues) {
  EXPECT_TRUE(VectorNear(classical_invert(model_of(identity_channel(2)), RealVector{0.4, 0.6}),
                         RealVector{0.4, 0.6}, 1e-15));
  EXPECT_TRUE(VectorNear(classical_invert(model_of(amplitude_damping(0.3)), RealVector{0.3, 0.7}),
                         RealVector{0.0, 1.0}, 1e-15));
}

TEST(ClassicalInvert, SingularAssignmentThrows) {
  // A = [[.5, .5], [.5, .5]] at theta = pi/2.
  EXPECT_THROW(classical_invert(model_of(rotation_y(std::numbers::pi / 2)),
                                RealVector{0.5, 0.5}),
               std::domain_error);
}

TEST(ClassicalInvert, IncompleteUnderCoherentNoise) {
  // |+><+| through the over-rotation: ignoring C biases the populations,
  // while the full solver explains z exactly.
  const auto m = model_of(rotation_y(0.5));
  const StateDecomposition plus{{0.5, 0.5}, {0.5, 0.0}};
  const RealVector z = forward(m, plus);
  const RealVector x_classical = classical_invert(m, z);
  const auto r = mitigate(MitigationProblem(m, z));
  const double classical_error = testing::max_abs_diff(x_classical, plus.x);
  const double residual_full = testing::max_abs_diff(assemble_B(m) * std::span<const double>(r.v_hat), z);
  EXPECT_GT(classical_error, 0.1);
  EXPECT_LE(residual_full, 1e-8);
  EXPECT_GT(classical_error, testing::max_abs_diff(forward(m, {r.x_hat, r.y_hat}), z));
}

TEST(GramSpectralBound, MatchesKnownNorm) {
  RealMatrix m(2, 3);
  m(0, 0) = 3.0;
  m(1, 1) = 2.0;
  EXPECT_NEAR(gram_spectral_bound(m, 0), 9.0, 1e-8);
}

}  // namespace
}  // namespace cohread
