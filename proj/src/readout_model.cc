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

#include "cohread/readout_model.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cohread {
namespace {

constexpr double kImaginaryResidueTol = 1e-12;

}  // namespace

ReadoutModel::ReadoutModel(RealMatrix a, RealMatrix c)
    : a_(std::move(a)), c_(std::move(c)) {
  const std::size_t n = a_.rows();
  if (n == 0 || a_.cols() != n) {
    throw std::invalid_argument("assignment matrix must be square and non-empty");
  }
  if (c_.rows() != n || c_.cols() != coherence_length(n)) {
    throw std::invalid_argument("coherence matrix must be " + std::to_string(n) +
                                " x " + std::to_string(coherence_length(n)) +
                                ", got " + std::to_string(c_.rows()) + " x " +
                                std::to_string(c_.cols()));
  }
  for (double v : a_.data())
    if (!std::isfinite(v)) throw std::invalid_argument("A has non-finite entries");
  for (double v : c_.data())
    if (!std::isfinite(v)) throw std::invalid_argument("C has non-finite entries");
}

ModelDefects model_defects(const ReadoutModel& model) {
  ModelDefects d{0.0, 0.0, 0.0};
  for (double s : model.A().column_sums()) d.a_column_sum = std::max(d.a_column_sum, std::abs(s - 1.0));
  for (double v : model.A().data()) d.a_range = std::max({d.a_range, -v, v - 1.0});
  for (double s : model.C().column_sums()) d.c_column_sum = std::max(d.c_column_sum, std::abs(s));
  return d;
}

ReadoutModel extract(const Povm& povm) {
  const std::size_t n = povm.dim();
  RealMatrix a(n, n);
  RealMatrix c(n, coherence_length(n));
  for (std::size_t k = 0; k < n; ++k) {
    const auto& f = povm[k];
    for (std::size_t l = 0; l < n; ++l) {
      if (std::abs(f(l, l).imag()) > kImaginaryResidueTol) {
        throw std::domain_error("POVM element " + std::to_string(k) +
                                " has a complex diagonal entry");
      }
      a(k, l) = f(l, l).real();
      for (std::size_t r = l + 1; r < n; ++r) {
        const std::size_t idx = coherence_index(l, r, n);
        c(k, idx) = 2.0 * f(l, r).real();
        c(k, idx + 1) = 2.0 * f(l, r).imag();
      }
    }
  }
  return ReadoutModel(std::move(a), std::move(c));
}

RealVector forward(const ReadoutModel& model, const StateDecomposition& state) {
  if (state.x.size() != model.dim() || state.y.size() != model.C().cols()) {
    throw std::invalid_argument("forward: state dimension " +
                                std::to_string(state.x.size()) +
                                " does not match model dimension " +
                                std::to_string(model.dim()));
  }
  RealVector z = model.A() * std::span<const double>(state.x);
  const RealVector cy = model.C() * std::span<const double>(state.y);
  for (std::size_t k = 0; k < z.size(); ++k) z[k] += cy[k];
  return z;
}

RealVector classical_forward(const ReadoutModel& model, std::span<const double> x) {
  if (x.size() != model.dim()) {
    throw std::invalid_argument("classical_forward: expected " +
                                std::to_string(model.dim()) + " populations, got " +
                                std::to_string(x.size()));
  }
  return model.A() * x;
}

RealVector oracle_probabilities(const KrausChannel& channel, const DensityMatrix& rho) {
  if (rho.dim() != channel.dim()) {
    throw std::invalid_argument("oracle_probabilities: dimension mismatch");
  }
  const ComplexMatrix out = superoperator(channel).apply(rho.matrix());
  RealVector z(out.dim());
  for (std::size_t k = 0; k < z.size(); ++k) z[k] = out(k, k).real();
  return z;
}

double nonclassicality(const ReadoutModel& model, NormKind norm) {
  switch (norm) {
    case NormKind::kMax: return model.C().max_abs();
    case NormKind::kFrobenius: return model.C().frobenius_norm();
  }
  throw std::invalid_argument("unknown norm");
}

}  // namespace cohread
