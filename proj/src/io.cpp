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

#include "qforge/io.hpp"

#include <fstream>

#include "qforge/modular.hpp"

namespace qforge::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

double number(const Json& v, const char* what) {
  if (!v.is_number()) throw SchemaError(std::string(what) + " must be a number");
  return v.get<double>();
}

cplx complex_from(const Json& v) {
  if (!v.is_array() || v.size() != 2) throw SchemaError("complex entries must be [re, im] pairs");
  return {number(v[0], "real part"), number(v[1], "imaginary part")};
}

std::vector<double> number_list(const Json& v, const char* what) {
  if (!v.is_array()) throw SchemaError(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (const Json& x : v) out.push_back(number(x, what));
  return out;
}

struct GateWriter {
  Json operator()(const SumPow& g) const {
    return {{"kind", "sum"}, {"control", g.control}, {"target", g.target}, {"k", g.k}};
  }
  Json operator()(const DiagSingle& g) const { return {{"kind", "diag"}, {"qudit", g.qudit}, {"phases", g.phases}}; }
  Json operator()(const TwoLevelH& g) const {
    return {{"kind", "h2"}, {"qudit", g.qudit}, {"level_a", g.level_a}, {"level_b", g.level_b}};
  }
  Json operator()(const XPow& g) const { return {{"kind", "x"}, {"qudit", g.qudit}, {"k", g.k}}; }
  Json operator()(const GlobalPhase& g) const { return {{"kind", "gphase"}, {"angle", g.angle}}; }
};

Gate gate_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw SchemaError("gate kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "sum") return SumPow{int_field(j, "control"), int_field(j, "target"), int_field(j, "k")};
  if (k == "diag") return DiagSingle{int_field(j, "qudit"), number_list(field(j, "phases"), "phases")};
  if (k == "h2") return TwoLevelH{int_field(j, "qudit"), int_field(j, "level_a"), int_field(j, "level_b")};
  if (k == "x") return XPow{int_field(j, "qudit"), int_field(j, "k")};
  if (k == "gphase") return GlobalPhase{number(field(j, "angle"), "angle")};
  throw SchemaError("unknown gate kind \"" + k + "\"");
}

// Malformed values that parse fine (bad d, wrong lengths) surface as
// std::invalid_argument from the domain checks; report them as schema errors.
template <typename F>
auto checked(F&& f) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

}  // namespace

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

Json circuit_to_json(const Circuit& c) {
  Json gates = Json::array();
  for (const Gate& g : c.gates()) gates.push_back(std::visit(GateWriter{}, g));
  return {{"d", c.d()}, {"n_main", c.system().n_main}, {"n_anc", c.system().n_anc}, {"gates", gates}};
}

Circuit circuit_from_json(const Json& j) {
  return checked([&] {
    const QuditSystem sys{int_field(j, "d"), int_field(j, "n_main"), int_field(j, "n_anc")};
    sys.check();
    Circuit c(sys);
    const Json& gates = field(j, "gates");
    if (!gates.is_array()) throw SchemaError("\"gates\" must be an array");
    for (const Json& g : gates) c.append(gate_from_json(g));
    return c;
  });
}

Json diagonal_to_json(const DiagonalSpec& s) { return {{"d", s.d}, {"n", s.n}, {"beta", s.beta}}; }

DiagonalSpec diagonal_from_json(const Json& j) {
  return checked([&] {
    DiagonalSpec s{int_field(j, "d"), int_field(j, "n"), number_list(field(j, "beta"), "beta")};
    s.check();
    return s;
  });
}

Json amplitudes_to_json(std::span<const cplx> amps) {
  Json out = Json::array();
  for (const cplx& a : amps) out.push_back(Json::array({a.real(), a.imag()}));
  return out;
}

std::vector<cplx> amplitudes_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("amplitudes must be an array of [re, im] pairs");
  std::vector<cplx> out;
  out.reserve(j.size());
  for (const Json& v : j) out.push_back(complex_from(v));
  return out;
}

Json state_to_json(const StateSpec& s) {
  return {{"d", s.d}, {"n", s.n}, {"amplitudes", amplitudes_to_json(s.amplitudes)}};
}

StateSpec state_from_json(const Json& j) {
  return checked([&] {
    StateSpec s{int_field(j, "d"), int_field(j, "n"), amplitudes_from_json(field(j, "amplitudes"))};
    s.check();
    return s;
  });
}

Json unitary_to_json(const DenseUnitary& u, int d, int n) {
  Json matrix = Json::array();
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    for (Eigen::Index c = 0; c < u.cols(); ++c) matrix.push_back(Json::array({u(r, c).real(), u(r, c).imag()}));
  }
  return {{"d", d}, {"n", n}, {"matrix", matrix}};
}

DenseUnitary unitary_from_json(const Json& j, int& d, int& n) {
  return checked([&] {
    d = int_field(j, "d");
    n = int_field(j, "n");
    if (d < 2 || n < 1) throw SchemaError("unitary needs d >= 2 and n >= 1");
    const auto entries = amplitudes_from_json(field(j, "matrix"));
    const auto dim = static_cast<Eigen::Index>(checked_pow(d, n));
    if (static_cast<Eigen::Index>(entries.size()) != dim * dim) throw SchemaError("matrix must have d^(2n) entries");
    DenseUnitary u(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
      for (Eigen::Index c = 0; c < dim; ++c) u(r, c) = entries[static_cast<std::size_t>(r * dim + c)];
    }
    return u;
  });
}

Json graph_to_json(const CouplingGraph& g) {
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
  return {{"nodes", g.node_count()}, {"edges", edges}};
}

CouplingGraph graph_from_json(const Json& j) {
  return checked([&] {
    const int nodes = int_field(j, "nodes");
    if (nodes < 1) throw SchemaError("graph needs at least one node");
    CouplingGraph g(nodes);
    const Json& edges = field(j, "edges");
    if (!edges.is_array()) throw SchemaError("\"edges\" must be an array");
    for (const Json& e : edges) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw SchemaError("edges must be [a, b] integer pairs");
      }
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
  });
}

}  // namespace qforge::io
