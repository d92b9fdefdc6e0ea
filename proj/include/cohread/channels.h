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

#ifndef COHREAD_CHANNELS_H_
#define COHREAD_CHANNELS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cohread/linalg.h"
#include "cohread/random.h"

namespace cohread {

/// A quantum channel in operator-sum form, rho -> sum_a E_a rho E_a^dagger.
///
/// Construction only checks structure (non-empty, square, equal
/// dimensions). Use `validate_cptp` or `KrausChannel::checked` for trace
/// preservation; every named constructor below yields a CPTP channel.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> kraus_ops);

  /// Same as the constructor, but throws std::domain_error when the
  /// completeness defect exceeds `tol`.
  static KrausChannel checked(std::vector<ComplexMatrix> kraus_ops,
                              double tol = kPhysicalTol);

  std::size_t dim() const { return ops_.front().dim(); }
  std::span<const ComplexMatrix> kraus_ops() const { return ops_; }

 private:
  std::vector<ComplexMatrix> ops_;
};

struct CptpReport {
  /// ||sum_a E_a^dagger E_a - I||_inf (largest entry modulus).
  double defect;
  bool passed;
};

CptpReport validate_cptp(const KrausChannel& channel, double tol = kPhysicalTol);

/// Schrodinger picture: sum_a E_a rho E_a^dagger.
ComplexMatrix apply(const KrausChannel& channel, const ComplexMatrix& rho);
/// Heisenberg picture: sum_a E_a^dagger m E_a.
ComplexMatrix adjoint_apply(const KrausChannel& channel, const ComplexMatrix& m);

KrausChannel identity_channel(std::size_t dim);
/// Single-qubit dephasing scaling the coherences by `lambda` in [0, 1].
KrausChannel dephasing(double lambda);
/// Single-qubit amplitude damping with decay probability `gamma` in [0, 1].
KrausChannel amplitude_damping(double gamma);
/// Coherent over-rotation about y before measurement. The Kraus operator is
/// exp(+i theta Y / 2) = [[cos(theta/2), sin(theta/2)], [-sin(theta/2),
/// cos(theta/2)]], which gives the effective POVM
///   F_0 = [[cos^2(theta/2), sin(theta)/2], [sin(theta)/2, sin^2(theta/2)]]
/// and C = [[sin(theta), 0], [-sin(theta), 0]].
KrausChannel rotation_y(double theta);
/// Pauli channel sum_i p_i P_i rho P_i over n-qubit Pauli strings. `probs`
/// has 4^n entries indexed lexicographically with per-qubit order I, X, Y, Z
/// and qubit 0 most significant. Zero-probability terms are dropped.
KrausChannel pauli_channel(std::span<const double> probs, std::size_t num_qubits);
/// n-qubit Pauli string for a lexicographic index in [0, 4^n).
ComplexMatrix pauli_string(std::size_t index, std::size_t num_qubits);

/// Kraus list {kron(A_a, B_b)}; `first` acts on the most significant factor.
KrausChannel tensor(const KrausChannel& first, const KrausChannel& second);
/// outer after inner: Kraus list {O_a I_b}.
KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner);

/// Random CPTP channel with `num_kraus` operators: complex Gaussian G_a
/// right-multiplied by (sum_a G_a^dagger G_a)^{-1/2}.
KrausChannel random_channel(std::size_t dim, std::size_t num_kraus, Rng& rng);

/// Matrix H acting on column-stacked vec(rho).
class Superoperator {
 public:
  Superoperator(std::size_t dim, ComplexMatrix matrix);

  std::size_t dim() const { return dim_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  /// unvec(H vec(rho)).
  ComplexMatrix apply(const ComplexMatrix& rho) const;

 private:
  std::size_t dim_;
  ComplexMatrix matrix_;
};

/// H = sum_a conj(E_a) (x) E_a.
Superoperator superoperator(const KrausChannel& channel);

}  // namespace cohread

#endif  // COHREAD_CHANNELS_H_
