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

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "qforge/diagonal_synth.hpp"
#include "qforge/graycode.hpp"
#include "qforge/io.hpp"
#include "qforge/modular.hpp"
#include "qforge/random.hpp"
#include "qforge/routing.hpp"
#include "qforge/simulator.hpp"
#include "qforge/state_prep.hpp"
#include "qforge/unitary_synth.hpp"

using namespace qforge;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void emit_json(const std::string& path, const io::Json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    io::write_json(path, j);
  }
}

DenseUnitary diagonal_matrix(const DiagonalSpec& s) {
  const auto dim = static_cast<Eigen::Index>(s.beta.size());
  DenseUnitary u = DenseUnitary::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) u(i, i) = std::polar(1.0, s.beta[static_cast<std::size_t>(i)]);
  return u;
}

// "5:10", "5..10" or "7".
std::pair<int, int> parse_range(const std::string& text) {
  auto sep = text.find(':');
  std::size_t skip = 1;
  if (sep == std::string::npos) {
    sep = text.find("..");
    skip = 2;
  }
  try {
    if (sep == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + skip))};
  } catch (const std::exception&) {
    throw UsageError("bad range \"" + text + "\" (expected a:b)");
  }
}

struct SynthArgs {
  std::string kind = "diag";
  std::string input;
  std::string output;
  int ancilla = 0;
  std::string coupling;
  bool expand = false;
  std::string order = "interval";
};

int cmd_synth(const SynthArgs& a) {
  if (a.ancilla < 0) throw UsageError("--ancilla must be >= 0");
  const io::Json in = io::read_json(a.input);
  std::optional<CouplingGraph> graph;
  if (!a.coupling.empty()) {
    if (a.ancilla > 0) throw UsageError("--coupling and --ancilla cannot be combined");
    graph = io::graph_from_json(io::read_json(a.coupling));
  }
  StatePrepOptions options;
  options.order = a.order == "residue" ? SplitOrder::residue : SplitOrder::interval;
  if (graph) {
    options.backend = {DiagonalBackend::Kind::routed, &*graph};
  } else if (a.ancilla > 0) {
    options.backend = {DiagonalBackend::Kind::parallel, nullptr};
  }

  std::optional<Circuit> circuit;
  if (a.kind == "diag") {
    const DiagonalSpec spec = io::diagonal_from_json(in);
    if (graph) {
      circuit = synth_routed(spec, *graph);
    } else {
      circuit = synth_parallel(spec, a.ancilla);
    }
  } else if (a.kind == "state") {
    circuit = synth_state(io::state_from_json(in), a.ancilla, options);
  } else {
    int d = 0, n = 0;
    const DenseUnitary u = io::unitary_from_json(in, d, n);
    const auto cap = options_from_env().dim_cap;
    if (static_cast<std::uint64_t>(u.rows()) > cap) {
      throw CapExceeded("unitary dimension " + std::to_string(u.rows()) + " exceeds cap " + std::to_string(cap));
    }
    circuit = synth_unitary(u, d, n, a.ancilla, options);
  }
  if (a.expand) circuit = expand_sum_powers(*circuit);
  emit_json(a.output, io::circuit_to_json(*circuit));
  return kOk;
}

// Output amplitudes on the main register with the ancillas projected onto |0>.
std::vector<cplx> prepared_state(const Circuit& c, const SimulatorOptions& options) {
  const QuditSystem& sys = c.system();
  const std::uint64_t full = checked_pow(sys.d, sys.total());
  if (full > options.state_cap) throw CapExceeded("state dimension " + std::to_string(full) + " exceeds cap");
  const StateVector out = run(c, StateVector(sys.d, sys.total()), options.parallel);
  const std::uint64_t anc = checked_pow(sys.d, sys.n_anc);
  std::vector<cplx> main(static_cast<std::size_t>(full / anc));
  for (std::size_t x = 0; x < main.size(); ++x) main[x] = out[x * anc];
  return main;
}

int cmd_verify(const std::string& circuit_path, const std::string& reference_path, double tol) {
  const Circuit c = io::circuit_from_json(io::read_json(circuit_path));
  const io::Json ref = io::read_json(reference_path);
  const SimulatorOptions options = options_from_env();
  double deviation = 0.0;
  if (ref.contains("amplitudes")) {
    const StateSpec s = io::state_from_json(ref);
    if (s.d != c.d() || s.n != c.system().n_main) throw io::SchemaError("state shape does not match the circuit");
    deviation = max_deviation_up_to_global_phase(prepared_state(c, options), s.amplitudes);
  } else {
    DenseUnitary expected;
    if (ref.contains("beta")) {
      const DiagonalSpec s = io::diagonal_from_json(ref);
      if (s.d != c.d() || s.n != c.system().n_main) throw io::SchemaError("diagonal shape does not match the circuit");
      expected = diagonal_matrix(s);
    } else if (ref.contains("matrix")) {
      int d = 0, n = 0;
      expected = io::unitary_from_json(ref, d, n);
      if (d != c.d() || n != c.system().n_main) throw io::SchemaError("unitary shape does not match the circuit");
    } else if (ref.contains("gates")) {
      const Circuit other = io::circuit_from_json(ref);
      if (other.d() != c.d() || other.system().n_main != c.system().n_main) {
        throw io::SchemaError("reference circuit shape does not match");
      }
      expected = main_register_action(other, options);
    } else {
      throw io::SchemaError("reference has none of \"beta\", \"amplitudes\", \"matrix\", \"gates\"");
    }
    deviation = max_deviation_up_to_global_phase(main_register_action(c, options), expected);
  }
  std::printf("max deviation: %.3e\n", deviation);
  if (deviation <= tol) {
    std::printf("ok (tol %.1e)\n", tol);
    return kOk;
  }
  std::printf("MISMATCH (tol %.1e)\n", tol);
  return kMismatch;
}

struct BenchArgs {
  int d = 3;
  std::string n_range = "5:10";
  std::vector<int> m_list{0, 50, 100, 200, 300};
  int trials = 1;
  std::uint64_t seed = 1;
  std::string out;
  int jobs = 1;
  bool no_timing = false;
  bool no_verify = false;
};

struct BenchRow {
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
  std::size_t depth = 0;
  std::size_t two_qudit = 0;
  std::size_t single_qudit = 0;
  double wall_ms = 0.0;
  bool verified = false;
  double deviation = 0.0;
};

int cmd_bench_depth(const BenchArgs& a) {
  require_prime(a.d, "bench-depth");
  const auto [n_lo, n_hi] = parse_range(a.n_range);
  if (n_lo < 1 || n_hi < n_lo) throw UsageError("--n-range must satisfy 1 <= lo <= hi");
  if (a.trials < 1) throw UsageError("--trials must be >= 1");
  if (a.jobs < 1) throw UsageError("--jobs must be >= 1");
  for (int m : a.m_list) {
    if (m < 0) throw UsageError("--m-list entries must be >= 0");
  }
  const SimulatorOptions sim = options_from_env();

  std::vector<BenchRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int m : a.m_list) {
      for (int t = 0; t < a.trials; ++t) rows.push_back({n, m, a.seed + static_cast<std::uint64_t>(t)});
    }
  }
  std::vector<std::string> errors(rows.size());
#pragma omp parallel for schedule(dynamic) num_threads(a.jobs)
  for (std::size_t i = 0; i < rows.size(); ++i) {
    BenchRow& r = rows[i];
    try {
      const DiagonalSpec spec = random_diagonal(a.d, r.n, r.seed);
      const auto t0 = std::chrono::steady_clock::now();
      const Circuit c = synth_parallel(spec, r.m);
      const auto t1 = std::chrono::steady_clock::now();
      const GateCounts counts = size(c);
      r.depth = depth(c);
      r.two_qudit = counts.two_qudit;
      r.single_qudit = counts.single_qudit;
      r.wall_ms = a.no_timing ? 0.0 : std::chrono::duration<double, std::milli>(t1 - t0).count();
      if (!a.no_verify && spec.dimension() <= sim.dim_cap) {
        SimulatorOptions serial = sim;
        serial.parallel = false;
        r.deviation = max_deviation_up_to_global_phase(main_register_action(c, serial), diagonal_matrix(spec));
        r.verified = true;
      }
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!errors[i].empty()) throw std::runtime_error("n=" + std::to_string(rows[i].n) + ": " + errors[i]);
  }
  std::sort(rows.begin(), rows.end(), [](const BenchRow& x, const BenchRow& y) {
    return std::tie(x.n, x.m, x.seed) < std::tie(y.n, y.m, y.seed);
  });

  std::ostringstream csv;
  csv << "d,n,m,seed,depth,two_qudit,single_qudit,wall_ms\n";
  bool ok = true;
  for (const BenchRow& r : rows) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
    csv << a.d << ',' << r.n << ',' << r.m << ',' << r.seed << ',' << r.depth << ',' << r.two_qudit << ','
        << r.single_qudit << ',' << ms << '\n';
    if (a.no_verify) continue;
    if (!r.verified) {
      std::fprintf(stderr, "n=%d m=%d seed=%llu: d^n above the simulator cap, verification skipped\n", r.n, r.m,
                   static_cast<unsigned long long>(r.seed));
    } else if (r.deviation > 1e-8) {
      std::fprintf(stderr, "n=%d m=%d seed=%llu: oracle deviation %.3e\n", r.n, r.m,
                   static_cast<unsigned long long>(r.seed), r.deviation);
      ok = false;
    }
  }
  if (a.out.empty() || a.out == "-") {
    std::cout << csv.str();
  } else {
    std::ofstream f(a.out);
    if (!f) throw std::runtime_error("cannot write " + a.out);
    f << csv.str();
  }
  return ok ? kOk : kMismatch;
}

int cmd_gray(int d, int n) {
  for (const Codeword& w : gray_sequence(d, n)) std::cout << to_string(w) << '\n';
  return kOk;
}

int cmd_unitary(const std::string& circuit_path, const std::string& out) {
  const Circuit c = io::circuit_from_json(io::read_json(circuit_path));
  emit_json(out, io::unitary_to_json(main_register_action(c, options_from_env()), c.d(), c.system().n_main));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qforge: exact qudit circuit synthesis for diagonal unitaries, states and unitaries"};
  app.require_subcommand(1);

  int rd_d = 3, rd_n = 2;
  std::uint64_t rd_seed = 1;
  std::string rd_out;
  auto* rand_diag = app.add_subcommand("rand-diag", "Random DiagonalSpec (beta_0 = 0, others uniform on [0, 2pi))");
  rand_diag->add_option("--d", rd_d, "Levels per qudit")->check(CLI::Range(2, 64));
  rand_diag->add_option("--n", rd_n, "Qudit count")->check(CLI::PositiveNumber);
  rand_diag->add_option("--seed", rd_seed, "Generator seed");
  rand_diag->add_option("--out,-o", rd_out, "Output file (stdout when omitted)");

  SynthArgs sa;
  auto* synth = app.add_subcommand("synth", "Synthesize a circuit from a spec file");
  synth->add_option("--kind", sa.kind, "Input kind")->check(CLI::IsMember({"diag", "state", "unitary"}));
  synth->add_option("input", sa.input, "Input JSON")->required();
  synth->add_option("--out,-o", sa.output, "Circuit JSON (stdout when omitted)");
  synth->add_option("--ancilla,-m", sa.ancilla, "Ancilla qudits for the parallel diagonal backend");
  synth->add_option("--coupling", sa.coupling, "Coupling graph JSON for routed synthesis");
  synth->add_flag("--expand-sum-powers", sa.expand, "Rewrite SumPow^k as k SumPow gates");
  synth->add_option("--split-order", sa.order, "State-prep split order")->check(CLI::IsMember({"interval", "residue"}));

  std::string vf_circuit, vf_reference;
  double vf_tol = 1e-8;
  auto* verify = app.add_subcommand("verify", "Compare a circuit against a diagonal, state, unitary or circuit");
  verify->add_option("circuit", vf_circuit, "Circuit JSON")->required();
  verify->add_option("reference", vf_reference, "Reference JSON")->required();
  verify->add_option("--tol", vf_tol, "Max elementwise deviation up to global phase");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench-depth", "Depth and size of synth_parallel over n and m, as CSV");
  bench->add_option("--d", ba.d, "Levels per qudit");
  bench->add_option("--n-range", ba.n_range, "Inclusive qudit range a:b");
  bench->add_option("--m-list", ba.m_list, "Ancilla counts")->delimiter(',');
  bench->add_option("--trials", ba.trials, "Instances per (n, m)");
  bench->add_option("--seed", ba.seed, "Seed of the first trial; trial t uses seed + t");
  bench->add_option("--out,-o", ba.out, "CSV file (stdout when omitted)");
  bench->add_option("--jobs,-j", ba.jobs, "Concurrent trials");
  bench->add_flag("--no-timing", ba.no_timing, "Write wall_ms as 0 so output is byte-reproducible");
  bench->add_flag("--no-verify", ba.no_verify, "Skip the oracle spot-checks");

  int gr_d = 3, gr_n = 2;
  auto* gray = app.add_subcommand("gray", "Print the d-ary Gray code, most significant digit first");
  gray->add_option("--d", gr_d, "Alphabet size")->check(CLI::Range(2, 64));
  gray->add_option("--n", gr_n, "Digits")->check(CLI::PositiveNumber);

  std::string un_circuit, un_out;
  auto* unitary = app.add_subcommand("unitary", "Dump a circuit's main-register unitary as JSON");
  unitary->add_option("circuit", un_circuit, "Circuit JSON")->required();
  unitary->add_option("--out,-o", un_out, "Output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*rand_diag) {
      emit_json(rd_out, io::diagonal_to_json(random_diagonal(rd_d, rd_n, rd_seed)));
      return kOk;
    }
    if (*synth) return cmd_synth(sa);
    if (*verify) return cmd_verify(vf_circuit, vf_reference, vf_tol);
    if (*bench) return cmd_bench_depth(ba);
    if (*gray) return cmd_gray(gr_d, gr_n);
    if (*unitary) return cmd_unitary(un_circuit, un_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
