// Copyright 2026 The qforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <span>
#include <json.hpp>
#include <stdexcept>
#include <string>

#include "qforge/circuit.hpp"
#include "qforge/coupling_graph.hpp"
#include "qforge/phase_gadget.hpp"
#include "qforge/simulator.hpp"
#include "qforge/state_prep.hpp"

namespace qforge::io {

using Json = nlohmann::json;

/// Input that parses but does not match the expected layout.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json read_json(const std::filesystem::path& path);
/// Two-space indented, trailing newline.
void write_json(const std::filesystem::path& path, const Json& j);

// Circuit: {"d", "n_main", "n_anc", "gates": [...]} where each gate is one of
//   {"kind": "sum", "control", "target", "k"}
//   {"kind": "diag", "qudit", "phases": [...]}
//   {"kind": "h2", "qudit", "level_a", "level_b"}
//   {"kind": "x", "qudit", "k"}
//   {"kind": "gphase", "angle"}
Json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const Json& j);

// {"d", "n", "beta": [...]}
Json diagonal_to_json(const DiagonalSpec& s);
DiagonalSpec diagonal_from_json(const Json& j);

// {"d", "n", "amplitudes": [[re, im], ...]}
Json state_to_json(const StateSpec& s);
StateSpec state_from_json(const Json& j);

// {"d", "n", "matrix": row-major [[re, im], ...]}
Json unitary_to_json(const DenseUnitary& u, int d, int n);
DenseUnitary unitary_from_json(const Json& j, int& d, int& n);

// {"nodes": count, "edges": [[a, b], ...]}
Json graph_to_json(const CouplingGraph& g);
CouplingGraph graph_from_json(const Json& j);

/// Amplitude list as [[re, im], ...].
Json amplitudes_to_json(std::span<const cplx> amps);
std::vector<cplx> amplitudes_from_json(const Json& j);

}  // namespace qforge::io
