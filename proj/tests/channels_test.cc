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

#include "cohread/channels.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

#include "cohread/state.h"
#include "test_util.h"

namespace cohread {
namespace {

using testing::MatrixNear;
using testing::random_hermitian;
using namespace std::complex_literals;

// Closed-form dephasing action: coherences scaled by lambda.
ComplexMatrix dephased(const ComplexMatrix& rho, double lambda) {
  return ComplexMatrix{{rho(0, 0), lambda * rho(0, 1)}, {lambda * rho(1, 0), rho(1, 1)}};
}

std::vector<KrausChannel> zoo() {
  std::vector<KrausChannel> out;
  for (double l : {0.0, 0.5, 1.0}) out.push_back(dephasing(l));
  for (double g : {0.0, 0.3, 1.0}) out.push_back(amplitude_damping(g));
  for (double t : {0.0, 0.3, std::numbers::pi / 2, std::numbers::pi}) out.push_back(rotation_y(t));
  out.push_back(pauli_channel(std::vector<double>{0.7, 0.1, 0.1, 0.1}, 1));
  out.push_back(tensor(amplitude_damping(0.3), rotation_y(0.4)));
  out.push_back(tensor(dephasing(0.2), pauli_channel(std::vector<double>{0.4, 0.3, 0.2, 0.1}, 1)));
  return out;
}

TEST(ValidateCptp, IdentityPasses) {
  const auto report = validate_cptp(identity_channel(2), 1e-10);
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(report.defect, 0.0);
}

TEST(ValidateCptp, AmplitudeDampingPasses) {
  EXPECT_TRUE(validate_cptp(amplitude_damping(0.3)).passed);
}

TEST(ValidateCptp, ScaledOperatorFails) {
  // {0.5 E_0} for identity E_0: 0.25 I - I has defect 0.75.
  const KrausChannel bad({0.5 * ComplexMatrix::identity(2)});
  const auto report = validate_cptp(bad, 1e-10);
  EXPECT_FALSE(report.passed);
  EXPECT_NEAR(report.defect, 0.75, 1e-15);
  EXPECT_THROW(KrausChannel::checked({0.5 * ComplexMatrix::identity(2)}), std::domain_error);
}

TEST(KrausChannel, StructuralErrors) {
  EXPECT_THROW(KrausChannel({}), std::invalid_argument);
  EXPECT_THROW(KrausChannel({ComplexMatrix::identity(2), ComplexMatrix::identity(4)}),
               std::invalid_argument);
}

TEST(Apply, IdentityLeavesStateUnchanged) {
  const auto rho = random_density(2, 17).matrix();
  EXPECT_EQ(apply(identity_channel(4), rho), rho);
}

TEST(Apply, DephasingMatchesClosedForm) {
  const ComplexMatrix rho{{0.6, 0.2 - 0.3i}, {0.2 + 0.3i, 0.4}};
  EXPECT_TRUE(MatrixNear(apply(dephasing(0.5), rho), dephased(rho, 0.5), 1e-15));
  const ComplexMatrix plus{{0.5, 0.5}, {0.5, 0.5}};
  EXPECT_TRUE(MatrixNear(apply(dephasing(0.0), plus), ComplexMatrix::diagonal(RealVector{0.5, 0.5}),
                         1e-15));
  EXPECT_TRUE(MatrixNear(apply(dephasing(1.0), rho), rho, 1e-15));
}

TEST(Apply, FullAmplitudeDampingDecaysToGround) {
  const auto one = ComplexMatrix::basis_op(2, 1, 1);
  EXPECT_TRUE(MatrixNear(apply(amplitude_damping(1.0), one), ComplexMatrix::basis_op(2, 0, 0),
                         1e-15));
  EXPECT_TRUE(MatrixNear(apply(amplitude_damping(1.0), random_density(1, 4).matrix()),
                         ComplexMatrix::basis_op(2, 0, 0), 1e-15));
  EXPECT_TRUE(MatrixNear(apply(amplitude_damping(0.0), one), one, 1e-15));
}

TEST(Apply, DimensionMismatchThrows) {
  EXPECT_THROW(apply(dephasing(0.5), ComplexMatrix::identity(4)), std::invalid_argument);
  EXPECT_THROW(adjoint_apply(dephasing(0.5), ComplexMatrix::identity(4)),
               std::invalid_argument);
}

TEST(AdjointApply, AmplitudeDampingGroundProjector) {
  const double gamma = 0.3;
  EXPECT_TRUE(MatrixNear(adjoint_apply(amplitude_damping(gamma), ComplexMatrix::basis_op(2, 0, 0)),
                         ComplexMatrix::diagonal(RealVector{1.0, gamma}), 1e-15));
  EXPECT_TRUE(MatrixNear(adjoint_apply(amplitude_damping(gamma), ComplexMatrix::basis_op(2, 1, 1)),
                         ComplexMatrix::diagonal(RealVector{0.0, 1.0 - gamma}), 1e-15));
}

TEST(AdjointApply, UnitalOnIdentity) {
  Rng rng(99);
  for (const auto& ch : zoo()) {
    EXPECT_TRUE(MatrixNear(adjoint_apply(ch, ComplexMatrix::identity(ch.dim())),
                           ComplexMatrix::identity(ch.dim()), 1e-10));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const auto ch = random_channel(std::size_t{2} << (trial % 3), 2 + trial % 4, rng);
    EXPECT_TRUE(MatrixNear(adjoint_apply(ch, ComplexMatrix::identity(ch.dim())),
                           ComplexMatrix::identity(ch.dim()), 1e-10));
  }
}

TEST(Duality, SchrodingerHeisenbergTraceAgreement) {
  Rng rng(1234);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = std::size_t{2} << (trial % 3);
    const auto ch = random_channel(dim, 1 + trial % 5, rng);
    const auto m = random_hermitian(dim, rng);
    const auto rho = random_hermitian(dim, rng);
    const Complex lhs = (m * apply(ch, rho)).trace();
    const Complex rhs = (adjoint_apply(ch, m) * rho).trace();
    EXPECT_LE(std::abs(lhs - rhs), 1e-11) << "trial " << trial;
  }
}

TEST(Dephasing, RejectsOutOfRange) {
  EXPECT_THROW(dephasing(-0.1), std::invalid_argument);
  EXPECT_THROW(dephasing(1.1), std::invalid_argument);
  EXPECT_THROW(amplitude_damping(1.5), std::invalid_argument);
  EXPECT_THROW(amplitude_damping(-1e-3), std::invalid_argument);
  EXPECT_THROW(rotation_y(std::nan("")), std::invalid_argument);
}

TEST(AmplitudeDamping, KrausOperatorsAsWritten) {
  const double gamma = 0.3;
  const auto ch = amplitude_damping(gamma);
  ASSERT_EQ(ch.kraus_ops().size(), 2u);
  EXPECT_EQ(ch.kraus_ops()[0], (ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1 - gamma)}}));
  EXPECT_EQ(ch.kraus_ops()[1], (ComplexMatrix{{0.0, std::sqrt(gamma)}, {0.0, 0.0}}));
}

TEST(RotationY, ZeroAngleIsIdentity) {
  const auto ch = rotation_y(0.0);
  ASSERT_EQ(ch.kraus_ops().size(), 1u);
  EXPECT_EQ(ch.kraus_ops()[0], ComplexMatrix::identity(2));
}

TEST(RotationY, HeisenbergProjectors) {
  const auto f0_pi = adjoint_apply(rotation_y(std::numbers::pi), ComplexMatrix::basis_op(2, 0, 0));
  EXPECT_TRUE(MatrixNear(f0_pi, ComplexMatrix::basis_op(2, 1, 1), 1e-15));
  const auto f0_half = adjoint_apply(rotation_y(std::numbers::pi / 2),
                                     ComplexMatrix::basis_op(2, 0, 0));
  EXPECT_NEAR(f0_half(0, 1).real(), 0.5, 1e-15);
  EXPECT_NEAR(f0_half(1, 0).real(), 0.5, 1e-15);
}

TEST(PauliChannel, DeltaDistributionIsIdentity) {
  const auto ch = pauli_channel(std::vector<double>{1.0, 0.0, 0.0, 0.0}, 1);
  ASSERT_EQ(ch.kraus_ops().size(), 1u);
  EXPECT_EQ(ch.kraus_ops()[0], ComplexMatrix::identity(2));
}

TEST(PauliChannel, RandomTwoQubitDistributionIsCptp) {
  Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> probs(16);
    double total = 0.0;
    for (double& p : probs) total += (p = rng.uniform());
    for (double& p : probs) p /= total;
    // Direct check sum_i p_i P_i^dagger P_i = I from the Pauli strings.
    ComplexMatrix direct(4);
    for (std::size_t i = 0; i < 16; ++i) {
      const auto p = pauli_string(i, 2);
      direct += probs[i] * (p.adjoint() * p);
    }
    EXPECT_TRUE(MatrixNear(direct, ComplexMatrix::identity(4), 1e-12));
    EXPECT_TRUE(validate_cptp(pauli_channel(probs, 2)).passed);
  }
}

TEST(PauliChannel, StringOrdering) {
  // Index 1 * 4 + 3 on two qubits is X (x) Z.
  const ComplexMatrix x{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix z{{1.0, 0.0}, {0.0, -1.0}};
  EXPECT_EQ(pauli_string(7, 2), kron(x, z));
  EXPECT_EQ(pauli_string(2, 1), (ComplexMatrix{{0.0, -1.0i}, {1.0i, 0.0}}));
}

TEST(PauliChannel, RejectsInvalidDistribution) {
  EXPECT_THROW(pauli_channel(std::vector<double>{0.5, 0.5, 0.5, -0.5}, 1), std::invalid_argument);
  EXPECT_THROW(pauli_channel(std::vector<double>{0.5, 0.4, 0.0, 0.0}, 1), std::invalid_argument);
  EXPECT_THROW(pauli_channel(std::vector<double>{1.0, 0.0, 0.0}, 1), std::invalid_argument);
}

TEST(Tensor, IdentityTimesIdentity) {
  const auto ch = tensor(identity_channel(2), identity_channel(2));
  EXPECT_EQ(ch.dim(), 4u);
  ASSERT_EQ(ch.kraus_ops().size(), 1u);
  EXPECT_EQ(ch.kraus_ops()[0], ComplexMatrix::identity(4));
}

TEST(Tensor, HeisenbergProjectorFactorizes) {
  const double gamma = 0.3;
  const auto ch = tensor(amplitude_damping(gamma), identity_channel(2));
  const auto f00 = adjoint_apply(ch, ComplexMatrix::basis_op(4, 0, 0));
  // F_{00} = F_0^{damping} (x) |0><0|.
  const auto expected = kron(ComplexMatrix::diagonal(RealVector{1.0, gamma}),
                             ComplexMatrix::basis_op(2, 0, 0));
  EXPECT_TRUE(MatrixNear(f00, expected, 1e-15));
  EXPECT_TRUE(MatrixNear(f00, ComplexMatrix::diagonal(RealVector{1.0, 0.0, gamma, 0.0}), 1e-15));
}

TEST(Tensor, ClosedUnderCptp) {
  EXPECT_TRUE(validate_cptp(tensor(rotation_y(0.7), dephasing(0.3))).passed);
}

TEST(Compose, IdentityIsNeutral) {
  const auto ch = amplitude_damping(0.4);
  const auto rho = random_density(1, 3).matrix();
  EXPECT_TRUE(MatrixNear(apply(compose(identity_channel(2), ch), rho), apply(ch, rho), 1e-15));
}

TEST(Compose, MatchesSequentialApplication) {
  Rng rng(5150);
  for (int trial = 0; trial < 20; ++trial) {
    const auto outer = random_channel(4, 2, rng);
    const auto inner = random_channel(4, 3, rng);
    const auto rho = random_density(2, 100 + trial).matrix();
    EXPECT_TRUE(MatrixNear(apply(compose(outer, inner), rho), apply(outer, apply(inner, rho)),
                           1e-12));
    EXPECT_TRUE(validate_cptp(compose(outer, inner)).passed);
  }
}

TEST(Compose, RotationsAdd) {
  const auto rho = random_density(1, 21).matrix();
  EXPECT_TRUE(MatrixNear(apply(compose(rotation_y(0.3), rotation_y(1.1)), rho),
                         apply(rotation_y(1.4), rho), 1e-14));
}

TEST(Compose, DephasingsMultiply) {
  const ComplexMatrix rho{{0.7, 0.1 + 0.4i}, {0.1 - 0.4i, 0.3}};
  for (double l1 : {0.0, 0.3, 0.9})
    for (double l2 : {0.2, 0.5, 1.0}) {
      const auto composed = apply(compose(dephasing(l1), dephasing(l2)), rho);
      EXPECT_TRUE(MatrixNear(composed, dephased(rho, l1 * l2), 1e-15));
    }
}

TEST(Compose, DimensionMismatchThrows) {
  EXPECT_THROW(compose(identity_channel(2), identity_channel(4)), std::invalid_argument);
}

TEST(Superoperator, IdentityChannel) {
  EXPECT_EQ(superoperator(identity_channel(2)).matrix(), ComplexMatrix::identity(4));
}

TEST(Superoperator, DephasingIsDiagonal) {
  // Build H column by column from the closed-form action on |r><c|.
  const double lambda = 0.35;
  ComplexMatrix expected(4);
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t r = 0; r < 2; ++r) {
      const auto image = vec(dephased(ComplexMatrix::basis_op(2, r, c), lambda));
      for (std::size_t i = 0; i < 4; ++i) expected(i, c * 2 + r) = image[i];
    }
  EXPECT_TRUE(MatrixNear(expected, ComplexMatrix::diagonal(RealVector{1, lambda, lambda, 1}), 0.0));
  EXPECT_TRUE(MatrixNear(superoperator(dephasing(lambda)).matrix(), expected, 1e-15));
}

TEST(Superoperator, AgreesWithApply) {
  Rng rng(31337);
  auto channels = zoo();
  for (int trial = 0; trial < 6; ++trial) channels.push_back(random_channel(4, 2 + trial % 3, rng));
  for (const auto& ch : channels) {
    const auto h = superoperator(ch);
    const std::size_t n = qubits_for_dim(ch.dim());
    for (int i = 0; i < 50; ++i) {
      const auto rho = random_density(n, 500 + i).matrix();
      const auto via_h = h.apply(rho);
      EXPECT_TRUE(MatrixNear(via_h, apply(ch, rho), 1e-12));
      EXPECT_NEAR(via_h.trace().real(), 1.0, 1e-10);
    }
  }
}

TEST(RandomChannel, IsCptp) {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto ch = random_channel(std::size_t{2} << (trial % 3), 1 + trial % 5, rng);
    EXPECT_TRUE(validate_cptp(ch).passed);
  }
}

}  // namespace
}  // namespace cohread
