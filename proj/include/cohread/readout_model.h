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

#ifndef COHREAD_READOUT_MODEL_H_
#define COHREAD_READOUT_MODEL_H_

#include <cstddef>
#include <span>

#include "cohread/channels.h"
#include "cohread/linalg.h"
#include "cohread/povm.h"
#include "cohread/state.h"

namespace cohread {

/// Linear readout map z = A x + C y.
///
/// A is N x N with A(k, l) = <l|F_k|l>. C is N x N(N-1) with columns in the
/// order of StateDecomposition::y; for each pair l < r,
///   C(k, Re c_lr) = 2 Re <l|F_k|r>,   C(k, Im c_lr) = 2 Im <l|F_k|r>.
/// The factor 2 accounts for both c_lr and c_rl = conj(c_lr), so the map
/// applies to (x, y) as stored without further scaling.
class ReadoutModel {
 public:
  /// Checks shapes only; see `model_defects` for the stochastic structure.
  ReadoutModel(RealMatrix a, RealMatrix c);

  std::size_t dim() const { return a_.rows(); }
  const RealMatrix& A() const { return a_; }
  const RealMatrix& C() const { return c_; }

 private:
  RealMatrix a_;
  RealMatrix c_;
};

/// Deviations from the structure every physical model has.
struct ModelDefects {
  double a_column_sum;  // max |sum_k A(k, l) - 1|
  double a_range;       // how far any A entry lies outside [0, 1]
  double c_column_sum;  // max |sum_k C(k, j)|

  bool passed(double tol = kPhysicalTol) const {
    return a_column_sum <= tol && a_range <= tol && c_column_sum <= tol;
  }
};

ModelDefects model_defects(const ReadoutModel& model);

/// Builds (A, C) from the POVM matrix elements.
ReadoutModel extract(const Povm& povm);

/// z = A x + C y.
RealVector forward(const ReadoutModel& model, const StateDecomposition& state);

/// z = A x, ignoring coherences.
RealVector classical_forward(const ReadoutModel& model, std::span<const double> x);

/// Outcome probabilities read off the diagonal of unvec(H vec(rho)). Goes
/// through the superoperator only and never touches POVM coefficients.
RealVector oracle_probabilities(const KrausChannel& channel, const DensityMatrix& rho);

enum class NormKind { kMax, kFrobenius };

/// Size of C under the chosen norm; zero iff the readout is classical.
double nonclassicality(const ReadoutModel& model, NormKind norm);

}  // namespace cohread

#endif  // COHREAD_READOUT_MODEL_H_
