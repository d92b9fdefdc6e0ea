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

#ifndef COHREAD_JSON_IO_H_
#define COHREAD_JSON_IO_H_

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "cohread/channels.h"
#include "cohread/linalg.h"
#include "cohread/readout_model.h"
#include "cohread/solver.h"
#include "cohread/state.h"

namespace cohread {

/// Malformed or structurally invalid input document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

/// Reads and parses a JSON file; throws FormatError on I/O or syntax errors.
Json read_json_file(const std::string& path);

// Complex matrices are row-major lists of [re, im] pairs.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json real_matrix_to_json(const RealMatrix& m);
RealMatrix real_matrix_from_json(const Json& j);

RealVector vector_from_json(const Json& j);

/// {"dim": N, "kraus": [...]} or {"builtin": name, "params": {...}}.
///
/// Builtins: identity {n}, dephasing {lambda}, amplitude_damping {gamma},
/// rotation_y {theta}, pauli {n, probs}, random {n, kraus_count, seed},
/// tensor {factors: [channel, ...]}, compose {outer: channel, inner: channel}.
KrausChannel channel_from_json(const Json& j);
Json channel_to_json(const KrausChannel& channel);

/// {"n": qubits, "matrix": [...]}, {"x": [...], "y": [...]}, or
/// {"n": qubits, "random_seed": s}. The state is validated as a density
/// matrix.
DensityMatrix state_from_json(const Json& j);
Json state_to_json(const DensityMatrix& rho);

inline constexpr const char* kColumnOrder = "lex-pairs-RI";

/// {"n": qubits, "A": [[...]], "C": [[...]], "column_order": "lex-pairs-RI"}.
Json model_to_json(const ReadoutModel& model);
ReadoutModel model_from_json(const Json& j);

Json result_to_json(const MitigationResult& result);

}  // namespace cohread

#endif  // COHREAD_JSON_IO_H_
