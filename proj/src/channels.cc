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
#include <stdexcept>
#include <string>

namespace cohread {
namespace {

void require_dim(const KrausChannel& channel, const ComplexMatrix& m,
                 const char* what) {
  if (m.dim() != channel.dim()) {
    throw std::invalid_argument(std::string(what) + ": channel acts on dim " +
                                std::to_string(channel.dim()) +
                                ", operand has dim " + std::to_string(m.dim()));
  }
}

void require_unit_interval(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " +
                                std::to_string(value));
  }
}

// Pauli matrices in the order I, X, Y, Z.
ComplexMatrix single_pauli(std::size_t which) {
  using namespace std::complex_literals;
  switch (which) {
    case 0: return {{1.0, 0.0}, {0.0, 1.0}};
    case 1: return {{0.0, 1.0}, {1.0, 0.0}};
    case 2: return {{0.0, -1.0i}, {1.0i, 0.0}};
    case 3: return {{1.0, 0.0}, {0.0, -1.0}};
  }
  throw std::out_of_range("Pauli index out of range");
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus_ops)
    : ops_(std::move(kraus_ops)) {
  if (ops_.empty()) {
    throw std::invalid_argument("a channel needs at least one Kraus operator");
  }
  for (const auto& op : ops_) {
    if (op.dim() != ops_.front().dim()) {
      throw std::invalid_argument("Kraus operators must share one dimension");
    }
    if (!op.all_finite()) {
      throw std::invalid_argument("Kraus operator has non-finite entries");
    }
  }
}

KrausChannel KrausChannel::checked(std::vector<ComplexMatrix> kraus_ops,
                                   double tol) {
  KrausChannel channel(std::move(kraus_ops));
  const auto report = validate_cptp(channel, tol);
  if (!report.passed) {
    throw std::domain_error("channel is not trace preserving: defect " +
                            std::to_string(report.defect));
  }
  return channel;
}

CptpReport validate_cptp(const KrausChannel& channel, double tol) {
  ComplexMatrix sum(channel.dim());
  for (const auto& op : channel.kraus_ops()) sum += op.adjoint() * op;
  sum -= ComplexMatrix::identity(channel.dim());
  const double defect = sum.max_abs();
  return {defect, defect <= tol};
}

ComplexMatrix apply(const KrausChannel& channel, const ComplexMatrix& rho) {
  require_dim(channel, rho, "apply");
  ComplexMatrix out(channel.dim());
  for (const auto& op : channel.kraus_ops()) out += op * rho * op.adjoint();
  return out;
}

ComplexMatrix adjoint_apply(const KrausChannel& channel, const ComplexMatrix& m) {
  require_dim(channel, m, "adjoint_apply");
  ComplexMatrix out(channel.dim());
  for (const auto& op : channel.kraus_ops()) out += op.adjoint() * m * op;
  return out;
}

KrausChannel identity_channel(std::size_t dim) {
  return KrausChannel({ComplexMatrix::identity(dim)});
}

KrausChannel dephasing(double lambda) {
  require_unit_interval(lambda, "dephasing lambda");
  const double keep = std::sqrt((1.0 + lambda) / 2.0);
  const double flip = std::sqrt((1.0 - lambda) / 2.0);
  return KrausChannel({keep * single_pauli(0), flip * single_pauli(3)});
}

KrausChannel amplitude_damping(double gamma) {
  require_unit_interval(gamma, "amplitude damping gamma");
  ComplexMatrix e0{{1.0, 0.0}, {0.0, std::sqrt(1.0 - gamma)}};
  ComplexMatrix e1{{0.0, std::sqrt(gamma)}, {0.0, 0.0}};
  return KrausChannel({std::move(e0), std::move(e1)});
}

KrausChannel rotation_y(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("theta must be finite");
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return KrausChannel({ComplexMatrix{{c, s}, {-s, c}}});
}

ComplexMatrix pauli_string(std::size_t index, std::size_t num_qubits) {
  if (num_qubits == 0) throw std::invalid_argument("need at least one qubit");
  std::size_t count = 1;
  for (std::size_t q = 0; q < num_qubits; ++q) count *= 4;
  if (index >= count) throw std::out_of_range("Pauli string index out of range");

  std::size_t stride = count / 4;
  ComplexMatrix out = single_pauli(index / stride);
  for (std::size_t q = 1; q < num_qubits; ++q) {
    index %= stride;
    stride /= 4;
    out = kron(out, single_pauli(index / stride));
  }
  return out;
}

KrausChannel pauli_channel(std::span<const double> probs, std::size_t num_qubits) {
  std::size_t count = 1;
  for (std::size_t q = 0; q < num_qubits; ++q) count *= 4;
  if (num_qubits == 0 || probs.size() != count) {
    throw std::invalid_argument("Pauli channel on " + std::to_string(num_qubits) +
                                " qubits needs " + std::to_string(count) +
                                " probabilities");
  }
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw std::invalid_argument("Pauli probabilities must be >= 0");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("Pauli probabilities must sum to 1, got " +
                                std::to_string(total));
  }
  std::vector<ComplexMatrix> ops;
  for (std::size_t i = 0; i < count; ++i) {
    if (probs[i] == 0.0) continue;
    ops.push_back(std::sqrt(probs[i]) * pauli_string(i, num_qubits));
  }
  return KrausChannel(std::move(ops));
}

KrausChannel tensor(const KrausChannel& first, const KrausChannel& second) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(first.kraus_ops().size() * second.kraus_ops().size());
  for (const auto& a : first.kraus_ops())
    for (const auto& b : second.kraus_ops()) ops.push_back(kron(a, b));
  return KrausChannel(std::move(ops));
}

KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner) {
  if (outer.dim() != inner.dim()) {
    throw std::invalid_argument("compose: dimension mismatch (" +
                                std::to_string(outer.dim()) + " vs " +
                                std::to_string(inner.dim()) + ")");
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(outer.kraus_ops().size() * inner.kraus_ops().size());
  for (const auto& o : outer.kraus_ops())
    for (const auto& i : inner.kraus_ops()) ops.push_back(o * i);
  return KrausChannel(std::move(ops));
}

KrausChannel random_channel(std::size_t dim, std::size_t num_kraus, Rng& rng) {
  if (num_kraus == 0) throw std::invalid_argument("need at least one Kraus operator");
  std::vector<ComplexMatrix> gs;
  ComplexMatrix gram(dim);
  for (std::size_t a = 0; a < num_kraus; ++a) {
    ComplexMatrix g(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
    gram += g.adjoint() * g;
    gs.push_back(std::move(g));
  }
  // gram^{-1/2} = V diag(1/sqrt(lambda)) V^dagger
  const auto eig = hermitian_eigen(gram);
  ComplexMatrix inv_sqrt(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const double w = 1.0 / std::sqrt(eig.values[k]);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        inv_sqrt(i, j) += w * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
  }
  for (auto& g : gs) g = g * inv_sqrt;
  return KrausChannel(std::move(gs));
}

Superoperator::Superoperator(std::size_t dim, ComplexMatrix matrix)
    : dim_(dim), matrix_(std::move(matrix)) {
  if (matrix_.dim() != dim_ * dim_) {
    throw std::invalid_argument("superoperator must be N^2 x N^2");
  }
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& rho) const {
  if (rho.dim() != dim_) {
    throw std::invalid_argument("superoperator apply: dimension mismatch");
  }
  const auto v = vec(rho);
  return unvec(matrix_ * std::span<const Complex>(v), dim_);
}

Superoperator superoperator(const KrausChannel& channel) {
  const std::size_t n = channel.dim();
  ComplexMatrix h(n * n);
  for (const auto& op : channel.kraus_ops()) h += kron(op.conjugate(), op);
  return Superoperator(n, std::move(h));
}

}  // namespace cohread
