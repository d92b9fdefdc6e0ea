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

#ifndef COHREAD_STATE_H_
#define COHREAD_STATE_H_

#include <cstddef>
#include <cstdint>

#include "cohread/linalg.h"

namespace cohread {

/// A validated density matrix: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  /// Throws std::domain_error if any property fails by more than `tol`.
  static DensityMatrix from_matrix(ComplexMatrix m, double tol = kPhysicalTol);

  std::size_t dim() const { return matrix_.dim(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}

  ComplexMatrix matrix_;
};

/// Populations x and interleaved coherences y of an N x N Hermitian matrix.
///
/// y = (Re c_01, Im c_01, Re c_02, Im c_02, ..., Re c_{N-2,N-1},
/// Im c_{N-2,N-1}) with c_lr = <l|rho|r> over pairs l < r in lexicographic
/// order.
struct StateDecomposition {
  RealVector x;
  RealVector y;

  std::size_t dim() const { return x.size(); }
};

/// N(N-1), the length of the coherence vector.
constexpr std::size_t coherence_length(std::size_t dim) { return dim * (dim - 1); }

/// Position of Re c_lr in y for l < r; Im c_lr follows at +1.
constexpr std::size_t coherence_index(std::size_t l, std::size_t r, std::size_t dim) {
  const std::size_t pairs_before = l * (dim - 1) - l * (l - 1) / 2;
  return 2 * (pairs_before + (r - l - 1));
}

/// n such that dim = 2^n; throws std::invalid_argument otherwise.
std::size_t qubits_for_dim(std::size_t dim);

StateDecomposition decompose(const DensityMatrix& rho);
/// Reads coordinates of any matrix without checking physicality. Only the
/// diagonal and upper triangle are consulted.
StateDecomposition decompose_hermitian(const ComplexMatrix& m);

/// Hermitian matrix with the given coordinates. The result need not be
/// positive semidefinite.
ComplexMatrix reconstruct(const StateDecomposition& d);

/// Random full-rank density matrix G G^dagger / Tr(G G^dagger) with complex
/// Gaussian G, deterministic in `seed`.
DensityMatrix random_density(std::size_t num_qubits, std::uint64_t seed);

}  // namespace cohread

#endif  // COHREAD_STATE_H_
