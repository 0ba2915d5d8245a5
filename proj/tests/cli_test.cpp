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

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "qforge/io.hpp"
#include "qforge/random.hpp"

using namespace qforge;
namespace fs = std::filesystem;

namespace {

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("qforge_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string at(const std::string& name) const { return (dir / name).string(); }
};

int run_cli(const std::string& args) {
  const std::string cmd = std::string(QFORGE_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(cli, rand_diag_is_byte_identical) {
  Scratch s;
  ASSERT_EQ(run_cli("rand-diag --d 3 --n 4 --seed 7 -o " + s.at("a.json")), 0);
  ASSERT_EQ(run_cli("rand-diag --d 3 --n 4 --seed 7 -o " + s.at("b.json")), 0);
  EXPECT_EQ(slurp(s.at("a.json")), slurp(s.at("b.json")));
  EXPECT_EQ(io::diagonal_from_json(io::read_json(s.at("a.json"))).beta, random_diagonal(3, 4, 7).beta);
}

TEST(cli, synth_then_verify_each_kind) {
  Scratch s;
  io::write_json(s.at("diag.json"), io::diagonal_to_json(random_diagonal(3, 3, 1)));
  io::write_json(s.at("state.json"), io::state_to_json(random_state(3, 2, 2)));
  io::write_json(s.at("unitary.json"), io::unitary_to_json(haar_unitary(9, 3), 3, 2));
  io::write_json(s.at("line.json"), io::graph_to_json(CouplingGraph::line(3)));
  for (const std::string kind : {"diag", "state", "unitary"}) {
    const std::string in = s.at(kind + ".json");
    const std::string out = s.at(kind + "_c.json");
    ASSERT_EQ(run_cli("synth " + in + " --kind " + kind + " -o " + out), 0) << kind;
    EXPECT_EQ(run_cli("verify " + out + " " + in), 0) << kind;
    ASSERT_EQ(run_cli("synth " + in + " --kind " + kind + " -m 2 -o " + out), 0) << kind;
    EXPECT_EQ(run_cli("verify " + out + " " + in), 0) << kind;
  }
  ASSERT_EQ(run_cli("synth " + s.at("diag.json") + " --coupling " + s.at("line.json") + " --expand-sum-powers -o " +
                   s.at("routed.json")),
            0);
  EXPECT_EQ(run_cli("verify " + s.at("routed.json") + " " + s.at("diag.json")), 0);
  EXPECT_EQ(run_cli("verify " + s.at("routed.json") + " " + s.at("diag_c.json")), 0);
  ASSERT_EQ(run_cli("unitary " + s.at("routed.json") + " -o " + s.at("routed_u.json")), 0);
  EXPECT_EQ(run_cli("verify " + s.at("routed.json") + " " + s.at("routed_u.json")), 0);
}

TEST(cli, perturbed_reference_is_a_mismatch) {
  Scratch s;
  DiagonalSpec spec = random_diagonal(3, 3, 4);
  io::write_json(s.at("diag.json"), io::diagonal_to_json(spec));
  ASSERT_EQ(run_cli("synth " + s.at("diag.json") + " -o " + s.at("c.json")), 0);
  spec.beta[5] += 1e-3;
  io::write_json(s.at("bad.json"), io::diagonal_to_json(spec));
  EXPECT_EQ(run_cli("verify " + s.at("c.json") + " " + s.at("bad.json")), 1);
  EXPECT_EQ(run_cli("verify " + s.at("c.json") + " " + s.at("bad.json") + " --tol 1e-2"), 0);
}

TEST(cli, usage_and_schema_errors) {
  Scratch s;
  EXPECT_EQ(run_cli(""), 2);
  EXPECT_EQ(run_cli("frobnicate"), 2);
  EXPECT_EQ(run_cli("rand-diag --d 1 --n 2"), 2);
  EXPECT_EQ(run_cli("synth " + s.at("missing.json")), 2);
  std::ofstream(s.at("junk.json")) << R"({"d": 3})";
  EXPECT_EQ(run_cli("synth " + s.at("junk.json")), 2);
  io::write_json(s.at("diag.json"), io::diagonal_to_json(random_diagonal(3, 2, 1)));
  io::write_json(s.at("line.json"), io::graph_to_json(CouplingGraph::line(2)));
  EXPECT_EQ(run_cli("synth " + s.at("diag.json") + " -m 2 --coupling " + s.at("line.json")), 2);
  EXPECT_EQ(run_cli("bench-depth --n-range x"), 2);
  EXPECT_EQ(run_cli("--help"), 0);
}

TEST(cli, bench_depth_is_reproducible) {
  Scratch s;
  const std::string args = "bench-depth --d 3 --n-range 3:4 --m-list 0,4 --trials 2 --no-timing -o ";
  ASSERT_EQ(run_cli(args + s.at("a.csv")), 0);
  ASSERT_EQ(run_cli(args + s.at("b.csv") + " --jobs 3"), 0);
  const std::string a = slurp(s.at("a.csv"));
  EXPECT_EQ(a, slurp(s.at("b.csv")));
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 9);
}

TEST(cli, gray_lists_every_word) {
  Scratch s;
  const std::string cmd = std::string(QFORGE_CLI_PATH) + " gray --d 3 --n 2 > " + s.at("g.txt");
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  const std::string text = slurp(s.at("g.txt"));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 9);
}
