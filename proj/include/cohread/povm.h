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

#ifndef COHREAD_POVM_H_
#define COHREAD_POVM_H_

#include <cstddef>
#include <span>
#include <vector>

#include "cohread/channels.h"
#include "cohread/linalg.h"

namespace cohread {

/// N-outcome POVM on an N-dimensional space: Hermitian, positive
/// semidefinite elements summing to the identity.
class Povm {
 public:
  /// Validates every axiom within `tol`; throws std::domain_error naming the
  /// first axiom that fails. Nothing is clamped or repaired.
  static Povm from_elements(std::vector<ComplexMatrix> elements,
                            double tol = kPhysicalTol);

  std::size_t dim() const { return elements_.front().dim(); }
  std::span<const ComplexMatrix> elements() const { return elements_; }
  const ComplexMatrix& operator[](std::size_t k) const { return elements_[k]; }

 private:
  explicit Povm(std::vector<ComplexMatrix> elements)
      : elements_(std::move(elements)) {}

  std::vector<ComplexMatrix> elements_;
};

struct PovmDefects {
  double hermitian;     // max |F_ij - conj(F_ji)| over all elements
  double min_eigenvalue;  // smallest eigenvalue over all elements
  double completeness;  // ||sum_k F_k - I||_inf

  bool passed(double tol = kPhysicalTol) const {
    return hermitian <= tol && min_eigenvalue >= -tol && completeness <= tol;
  }
};

/// Measures each POVM axiom without throwing. Elements must share one
/// dimension.
PovmDefects povm_defects(std::span<const ComplexMatrix> elements);

/// E^dagger(|k><k|) for every k, without validation.
std::vector<ComplexMatrix> heisenberg_projectors(const KrausChannel& channel);

/// F_k = E^dagger(|k><k|) for every computational-basis outcome k.
Povm effective_povm(const KrausChannel& channel, double tol = kPhysicalTol);

/// Operator-valued kernel K(s, t) = E(|s><t|).
ComplexMatrix kernel(const KrausChannel& channel, std::size_t s, std::size_t t);

/// max over k and l != r of |<k|K(l, r)|k>|. Zero exactly when the
/// measurement statistics do not depend on coherences.
double kernel_diag_defect(const KrausChannel& channel);

/// max over k and l != r of |<r|F_k|l>|.
double povm_offdiag_defect(const Povm& povm);

}  // namespace cohread

#endif  // COHREAD_POVM_H_
