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

#include "cohread/povm.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cohread {

PovmDefects povm_defects(std::span<const ComplexMatrix> elements) {
  if (elements.empty()) throw std::invalid_argument("POVM has no elements");
  const std::size_t n = elements.front().dim();
  PovmDefects d{0.0, 0.0, 0.0};
  ComplexMatrix sum(n);
  bool first = true;
  for (const auto& f : elements) {
    if (f.dim() != n) throw std::invalid_argument("POVM elements differ in dimension");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        d.hermitian = std::max(d.hermitian, std::abs(f(i, j) - std::conj(f(j, i))));
    const double min_eig = min_eigenvalue_hermitian(f);
    d.min_eigenvalue = first ? min_eig : std::min(d.min_eigenvalue, min_eig);
    first = false;
    sum += f;
  }
  sum -= ComplexMatrix::identity(n);
  d.completeness = sum.max_abs();
  return d;
}

Povm Povm::from_elements(std::vector<ComplexMatrix> elements, double tol) {
  if (elements.empty()) throw std::domain_error("POVM has no elements");
  const std::size_t n = elements.front().dim();
  if (elements.size() != n) {
    throw std::domain_error("POVM outcome count " + std::to_string(elements.size()) +
                            " differs from dimension " + std::to_string(n));
  }
  ComplexMatrix sum(n);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const auto& f = elements[k];
    if (f.dim() != n) throw std::domain_error("POVM elements differ in dimension");
    if (!is_hermitian(f, tol)) {
      throw std::domain_error("POVM axiom failed: element " + std::to_string(k) +
                              " is not Hermitian");
    }
    const double min_eig = min_eigenvalue_hermitian(f);
    if (min_eig < -tol) {
      throw std::domain_error("POVM axiom failed: element " + std::to_string(k) +
                              " is not positive semidefinite (min eigenvalue " +
                              std::to_string(min_eig) + ")");
    }
    sum += f;
  }
  sum -= ComplexMatrix::identity(n);
  if (sum.max_abs() > tol) {
    throw std::domain_error("POVM axiom failed: elements do not sum to identity "
                            "(defect " + std::to_string(sum.max_abs()) + ")");
  }
  return Povm(std::move(elements));
}

std::vector<ComplexMatrix> heisenberg_projectors(const KrausChannel& channel) {
  const std::size_t n = channel.dim();
  std::vector<ComplexMatrix> elements;
  elements.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    elements.push_back(adjoint_apply(channel, ComplexMatrix::basis_op(n, k, k)));
  }
  return elements;
}

Povm effective_povm(const KrausChannel& channel, double tol) {
  return Povm::from_elements(heisenberg_projectors(channel), tol);
}

ComplexMatrix kernel(const KrausChannel& channel, std::size_t s, std::size_t t) {
  const std::size_t n = channel.dim();
  if (s >= n || t >= n) {
    throw std::out_of_range("kernel index out of range for dimension " +
                            std::to_string(n));
  }
  return apply(channel, ComplexMatrix::basis_op(n, s, t));
}

double kernel_diag_defect(const KrausChannel& channel) {
  const std::size_t n = channel.dim();
  double defect = 0.0;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t r = 0; r < n; ++r) {
      if (l == r) continue;
      const auto k_lr = kernel(channel, l, r);
      for (std::size_t k = 0; k < n; ++k) defect = std::max(defect, std::abs(k_lr(k, k)));
    }
  return defect;
}

double povm_offdiag_defect(const Povm& povm) {
  const std::size_t n = povm.dim();
  double defect = 0.0;
  for (const auto& f : povm.elements())
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t r = 0; r < n; ++r)
        if (l != r) defect = std::max(defect, std::abs(f(r, l)));
  return defect;
}

}  // namespace cohread
