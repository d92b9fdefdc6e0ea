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

#include "cohread/state.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cohread/random.h"

namespace cohread {

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m, double tol) {
  if (!m.all_finite()) throw std::domain_error("density matrix has non-finite entries");
  if (!is_hermitian(m, tol)) throw std::domain_error("density matrix is not Hermitian");
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > tol) {
    throw std::domain_error("density matrix trace is " + std::to_string(tr.real()) +
                            (tr.imag() != 0.0 ? " + " + std::to_string(tr.imag()) + "i" : "") +
                            ", expected 1");
  }
  const double min_eig = min_eigenvalue_hermitian(m);
  if (min_eig < -tol) {
    throw std::domain_error("density matrix has negative eigenvalue " +
                            std::to_string(min_eig));
  }
  return DensityMatrix(std::move(m));
}

std::size_t qubits_for_dim(std::size_t dim) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if ((std::size_t{1} << n) != dim || dim < 2) {
    throw std::invalid_argument("dimension " + std::to_string(dim) +
                                " is not 2^n for n >= 1");
  }
  return n;
}

StateDecomposition decompose_hermitian(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  StateDecomposition d{RealVector(n), RealVector(coherence_length(n))};
  for (std::size_t l = 0; l < n; ++l) {
    d.x[l] = m(l, l).real();
    for (std::size_t r = l + 1; r < n; ++r) {
      const std::size_t idx = coherence_index(l, r, n);
      d.y[idx] = m(l, r).real();
      d.y[idx + 1] = m(l, r).imag();
    }
  }
  return d;
}

StateDecomposition decompose(const DensityMatrix& rho) {
  return decompose_hermitian(rho.matrix());
}

ComplexMatrix reconstruct(const StateDecomposition& d) {
  const std::size_t n = d.x.size();
  if (n == 0 || d.y.size() != coherence_length(n)) {
    throw std::invalid_argument("reconstruct: x has length " + std::to_string(n) +
                                " so y needs " + std::to_string(coherence_length(n)) +
                                ", got " + std::to_string(d.y.size()));
  }
  ComplexMatrix m(n);
  for (std::size_t l = 0; l < n; ++l) {
    m(l, l) = d.x[l];
    for (std::size_t r = l + 1; r < n; ++r) {
      const std::size_t idx = coherence_index(l, r, n);
      m(l, r) = Complex(d.y[idx], d.y[idx + 1]);
      m(r, l) = Complex(d.y[idx], -d.y[idx + 1]);
    }
  }
  return m;
}

DensityMatrix random_density(std::size_t num_qubits, std::uint64_t seed) {
  if (num_qubits == 0) throw std::invalid_argument("need at least one qubit");
  const std::size_t n = std::size_t{1} << num_qubits;
  Rng rng(seed);
  ComplexMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  ComplexMatrix rho = g * g.adjoint();
  // Exact Hermitian symmetry and a real diagonal.
  for (std::size_t i = 0; i < n; ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) rho(j, i) = std::conj(rho(i, j));
  }
  rho *= 1.0 / rho.trace().real();
  return DensityMatrix::from_matrix(std::move(rho));
}

}  // namespace cohread
