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

#include "cohread/json_io.h"

#include <fstream>
#include <sstream>

namespace cohread {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw FormatError(std::string(what) + " must be a number");
  return j.get<double>();
}

std::size_t count(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) {
    throw FormatError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::size_t dim_for_qubits(std::size_t n) {
  if (n == 0 || n > 6) throw FormatError("qubit count must lie in [1, 6]");
  return std::size_t{1} << n;
}

Json real_vector_to_json(std::span<const double> v) { return Json(RealVector(v.begin(), v.end())); }

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (const auto& z : m.data()) out.push_back({z.real(), z.imag()});
  return out;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("matrix must be a non-empty array");
  ComplexVector entries;
  entries.reserve(j.size());
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) {
      throw FormatError("matrix entries must be [re, im] pairs");
    }
    entries.emplace_back(number(pair[0], "real part"), number(pair[1], "imaginary part"));
  }
  try {
    return ComplexMatrix::from_row_major(entries);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("matrix: ") + e.what());
  }
}

Json real_matrix_to_json(const RealMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

RealMatrix real_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("real matrix must be a non-empty array");
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  RealMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw FormatError("real matrix rows must be arrays of equal length");
    }
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = number(j[i][c], "matrix entry");
  }
  return m;
}

RealVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("expected an array of numbers");
  RealVector v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(number(e, "vector entry"));
  return v;
}

KrausChannel channel_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("channel must be a JSON object");
  if (j.contains("builtin")) {
    const Json& name_field = j.at("builtin");
    if (!name_field.is_string()) throw FormatError("\"builtin\" must be a string");
    const std::string name = name_field.get<std::string>();
    const Json params = j.value("params", Json::object());
    if (name == "identity") {
      return identity_channel(dim_for_qubits(count(field(params, "n"), "n")));
    }
    if (name == "dephasing") return dephasing(number(field(params, "lambda"), "lambda"));
    if (name == "amplitude_damping") {
      return amplitude_damping(number(field(params, "gamma"), "gamma"));
    }
    if (name == "rotation_y") return rotation_y(number(field(params, "theta"), "theta"));
    if (name == "pauli") {
      const std::size_t n = count(field(params, "n"), "n");
      dim_for_qubits(n);
      return pauli_channel(vector_from_json(field(params, "probs")), n);
    }
    if (name == "random") {
      const std::size_t dim = dim_for_qubits(count(field(params, "n"), "n"));
      Rng rng(count(field(params, "seed"), "seed"));
      return random_channel(dim, count(field(params, "kraus_count"), "kraus_count"), rng);
    }
    if (name == "tensor") {
      const Json& factors = field(params, "factors");
      if (!factors.is_array() || factors.empty()) {
        throw FormatError("tensor needs a non-empty \"factors\" array");
      }
      KrausChannel out = channel_from_json(factors.front());
      for (std::size_t i = 1; i < factors.size(); ++i) {
        out = tensor(out, channel_from_json(factors[i]));
      }
      return out;
    }
    if (name == "compose") {
      return compose(channel_from_json(field(params, "outer")),
                     channel_from_json(field(params, "inner")));
    }
    throw FormatError("unknown builtin channel \"" + name + "\"");
  }

  const std::size_t dim = count(field(j, "dim"), "dim");
  const Json& kraus = field(j, "kraus");
  if (!kraus.is_array() || kraus.empty()) {
    throw FormatError("\"kraus\" must be a non-empty array of matrices");
  }
  std::vector<ComplexMatrix> ops;
  for (const auto& op : kraus) {
    ops.push_back(matrix_from_json(op));
    if (ops.back().dim() != dim) {
      throw FormatError("Kraus operator dimension " + std::to_string(ops.back().dim()) +
                        " does not match \"dim\" " + std::to_string(dim));
    }
  }
  return KrausChannel(std::move(ops));
}

Json channel_to_json(const KrausChannel& channel) {
  Json ops = Json::array();
  for (const auto& op : channel.kraus_ops()) ops.push_back(matrix_to_json(op));
  return {{"dim", channel.dim()}, {"kraus", std::move(ops)}};
}

DensityMatrix state_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("state must be a JSON object");
  if (j.contains("matrix")) {
    ComplexMatrix m = matrix_from_json(j.at("matrix"));
    if (j.contains("n") && m.dim() != dim_for_qubits(count(j.at("n"), "n"))) {
      throw FormatError("state matrix dimension does not match \"n\"");
    }
    return DensityMatrix::from_matrix(std::move(m));
  }
  if (j.contains("x")) {
    StateDecomposition d{vector_from_json(j.at("x")), vector_from_json(field(j, "y"))};
    if (d.x.empty() || d.y.size() != coherence_length(d.x.size())) {
      throw FormatError("state \"y\" must have N(N-1) entries for N = len(x)");
    }
    return DensityMatrix::from_matrix(reconstruct(d));
  }
  if (j.contains("random_seed")) {
    const std::size_t n = count(field(j, "n"), "n");
    dim_for_qubits(n);
    return random_density(n, count(j.at("random_seed"), "random_seed"));
  }
  throw FormatError("state needs \"matrix\", \"x\"/\"y\", or \"random_seed\"");
}

Json state_to_json(const DensityMatrix& rho) {
  return {{"n", qubits_for_dim(rho.dim())}, {"matrix", matrix_to_json(rho.matrix())}};
}

Json model_to_json(const ReadoutModel& model) {
  return {{"n", qubits_for_dim(model.dim())},
          {"A", real_matrix_to_json(model.A())},
          {"C", real_matrix_to_json(model.C())},
          {"column_order", kColumnOrder}};
}

ReadoutModel model_from_json(const Json& j) {
  if (j.contains("column_order") && j.at("column_order") != kColumnOrder) {
    throw FormatError("unsupported column_order; expected \"" + std::string(kColumnOrder) + "\"");
  }
  RealMatrix a = real_matrix_from_json(field(j, "A"));
  RealMatrix c = real_matrix_from_json(field(j, "C"));
  if (j.contains("n") && a.rows() != dim_for_qubits(count(j.at("n"), "n"))) {
    throw FormatError("model A dimension does not match \"n\"");
  }
  try {
    return ReadoutModel(std::move(a), std::move(c));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("model: ") + e.what());
  }
}

Json result_to_json(const MitigationResult& result) {
  return {{"x", real_vector_to_json(result.x_hat)},
          {"y", real_vector_to_json(result.y_hat)},
          {"residual", result.residual},
          {"iterations", result.iterations},
          {"converged", result.converged}};
}

}  // namespace cohread
