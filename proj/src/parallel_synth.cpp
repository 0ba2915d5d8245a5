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

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "qforge/diagonal_synth.hpp"
#include "qforge/graycode.hpp"
#include "qforge/modular.hpp"

namespace qforge {

namespace {

// A run of directions walked by one target: last nonzero digit at qudit p,
// qudits 0..p-r-1 fixed to the digits of `high`, qudits p-r..p-1 walked.
struct Chunk {
  int p = 0;
  int r = 0;
  std::uint64_t high = 0;
  std::uint64_t size = 1;
};

// One step of a target's program. Diagonal steps carry the flat index of the
// direction the target holds; sum steps name a main-register qudit.
struct Op {
  std::uint64_t direction = 0;
  std::int32_t control = -1;
  std::int32_t k = 0;
  bool diag() const { return control < 0; }
};

struct Layout {
  int d = 2;
  int n = 1;
  int copies = 1;
  int targets = 1;

  int copy_qudit(int j, int q) const { return j == 0 ? q : n + (j - 1) * n + q; }
  int target_qudit(int a) const { return n + (copies - 1) * n + a; }
};

int ceil_log(int d, std::uint64_t v) {
  int k = 0;
  for (std::uint64_t p = 1; p < v; p *= static_cast<std::uint64_t>(d)) ++k;
  return k;
}

std::vector<Chunk> make_chunks(int d, int n, int split) {
  std::vector<Chunk> chunks;
  for (int p = 0; p < n; ++p) {
    const int r = std::max(0, p - split);
    const std::uint64_t highs = checked_pow(d, p - r);
    const std::uint64_t size = checked_pow(d, r);
    for (std::uint64_t h = 0; h < highs; ++h) chunks.push_back({p, r, h, size});
  }
  return chunks;
}

// Longest-first greedy balancing; each target then runs its chunks in class order.
std::vector<std::vector<Chunk>> assign_chunks(std::vector<Chunk> chunks, int targets) {
  std::stable_sort(chunks.begin(), chunks.end(), [](const Chunk& a, const Chunk& b) { return a.size > b.size; });
  using Load = std::pair<std::uint64_t, int>;
  std::priority_queue<Load, std::vector<Load>, std::greater<>> loads;
  for (int a = 0; a < targets; ++a) loads.push({0, a});
  std::vector<std::vector<Chunk>> out(static_cast<std::size_t>(targets));
  for (const Chunk& c : chunks) {
    auto [load, a] = loads.top();
    loads.pop();
    out[static_cast<std::size_t>(a)].push_back(c);
    loads.push({load + 2 * c.size + static_cast<std::uint64_t>(c.p - c.r + 1), a});
  }
  for (auto& list : out) {
    std::sort(list.begin(), list.end(),
              [](const Chunk& a, const Chunk& b) { return std::tie(a.p, a.high) < std::tie(b.p, b.high); });
  }
  return out;
}

void move_to(std::vector<int>& cur, const std::vector<int>& next, int d, std::vector<Op>& ops) {
  for (std::size_t q = 0; q < cur.size(); ++q) {
    if (cur[q] != next[q]) ops.push_back({0, static_cast<std::int32_t>(q), mod(next[q] - cur[q], d)});
  }
  cur = next;
}

std::vector<Op> target_program(const std::vector<Chunk>& chunks, int d, int n, int a) {
  std::vector<Op> ops;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  std::vector<int> s(static_cast<std::size_t>(n), 0);
  for (const Chunk& c : chunks) {
    std::fill(s.begin(), s.end(), 0);
    const auto high = to_digits(c.high, d, c.p - c.r);
    std::copy(high.begin(), high.end(), s.begin());
    s[static_cast<std::size_t>(c.p)] = 1;
    move_to(cur, s, d, ops);
    ops.push_back({from_digits(cur, d), -1, 0});
    for (std::uint64_t b = 1; b < c.size; ++b) {
      const int q = c.p - 1 - parallel_digit(d, c.r, a % c.r, b);
      ops.push_back({0, q, 1});
      cur[static_cast<std::size_t>(q)] = (cur[static_cast<std::size_t>(q)] + 1) % d;
      ops.push_back({from_digits(cur, d), -1, 0});
    }
  }
  move_to(cur, std::vector<int>(static_cast<std::size_t>(n), 0), d, ops);
  return ops;
}

std::vector<std::vector<Op>> programs_for(int d, int n, int targets, int split) {
  const auto assigned = assign_chunks(make_chunks(d, n, split), targets);
  std::vector<std::vector<Op>> programs;
  programs.reserve(assigned.size());
  for (std::size_t a = 0; a < assigned.size(); ++a) {
    programs.push_back(target_program(assigned[a], d, n, static_cast<int>(a)));
  }
  return programs;
}

// Event-driven list scheduling. Each emitted gate lands exactly one layer
// after the latest ready time of its qudits, which is what depth() computes
// for the same gate order. `emit` receives every gate in that order.
template <typename Emit>
std::size_t schedule(const Layout& lay, const std::vector<std::vector<Op>>& programs, Emit&& emit) {
  std::vector<std::size_t> ready(static_cast<std::size_t>(lay.target_qudit(lay.targets)), 0);
  auto sum = [&](int c, int t, int k) {
    const std::size_t layer = std::max(ready[static_cast<std::size_t>(c)], ready[static_cast<std::size_t>(t)]) + 1;
    ready[static_cast<std::size_t>(c)] = ready[static_cast<std::size_t>(t)] = layer;
    emit(Gate{SumPow{c, t, k}});
  };

  std::vector<int> rounds;
  for (int have = 1; have < lay.copies; have *= 2) rounds.push_back(have);
  for (int have : rounds) {
    for (int j = have; j < std::min(2 * have, lay.copies); ++j) {
      for (int q = 0; q < lay.n; ++q) sum(lay.copy_qudit(j - have, q), lay.copy_qudit(j, q), 1);
    }
  }

  using Entry = std::pair<std::size_t, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::vector<std::size_t> cursor(programs.size(), 0);
  for (std::size_t a = 0; a < programs.size(); ++a) {
    if (!programs[a].empty()) queue.push({ready[static_cast<std::size_t>(lay.target_qudit(static_cast<int>(a)))], static_cast<int>(a)});
  }
  while (!queue.empty()) {
    const int a = queue.top().second;
    queue.pop();
    const auto ua = static_cast<std::size_t>(a);
    const Op& op = programs[ua][cursor[ua]++];
    const int t = lay.target_qudit(a);
    if (op.diag()) {
      ++ready[static_cast<std::size_t>(t)];
      emit(Gate{DiagSingle{t, {}}}, op.direction);
    } else {
      int best = lay.copy_qudit(0, op.control);
      for (int j = 1; j < lay.copies; ++j) {
        const int c = lay.copy_qudit(j, op.control);
        if (ready[static_cast<std::size_t>(c)] < ready[static_cast<std::size_t>(best)]) best = c;
      }
      sum(best, t, op.k);
    }
    if (cursor[ua] < programs[ua].size()) queue.push({ready[static_cast<std::size_t>(t)], a});
  }

  for (auto it = rounds.rbegin(); it != rounds.rend(); ++it) {
    const int have = *it;
    for (int j = std::min(2 * have, lay.copies) - 1; j >= have; --j) {
      for (int q = lay.n - 1; q >= 0; --q) sum(lay.copy_qudit(j - have, q), lay.copy_qudit(j, q), lay.d - 1);
    }
  }
  return *std::max_element(ready.begin(), ready.end());
}

struct DryEmit {
  void operator()(const Gate&) const {}
  void operator()(const Gate&, std::uint64_t) const {}
};

std::size_t sequential_depth(int d, int n) {
  AlphaVector zero{d, n, std::vector<double>(static_cast<std::size_t>(checked_pow(d, n) - 1), 0.0)};
  return depth(synth_from_alpha(zero));
}

// Geometric grid: 1..dense, then roughly 25% steps up to `limit`.
std::vector<int> grid(int dense, long long limit) {
  std::vector<int> out;
  for (long long v = 1; v <= limit; ) {
    out.push_back(static_cast<int>(v));
    v = v < dense ? v + 1 : std::max(v + 1, v + v / 4);
  }
  return out;
}

ParallelPlan search_plan(int d, int n, int m) {
  ParallelPlan best;
  best.depth = sequential_depth(d, n);
  const long long directions = static_cast<long long>((checked_pow(d, n) - 1) / static_cast<std::uint64_t>(d - 1));
  for (int copies : grid(6, 1 + m / n)) {
    const long long room = static_cast<long long>(m) - static_cast<long long>(copies - 1) * n;
    const long long cap = std::min({room, directions, 3LL * copies * n});
    for (int targets : grid(12, cap)) {
      const int base = ceil_log(d, static_cast<std::uint64_t>(targets));
      for (int split = base; split <= base + 1; ++split) {
        const Layout lay{d, n, copies, targets};
        const std::size_t dd = schedule(lay, programs_for(d, n, targets, split), DryEmit{});
        const int anc = (copies - 1) * n + targets;
        if (dd < best.depth || (dd == best.depth && best.targets > 0 && anc < best.ancillas)) {
          best = ParallelPlan{copies, targets, split, anc, dd};
        }
      }
    }
  }
  return best;
}

}  // namespace

ParallelPlan plan_parallel(int d, int n, int m) {
  require_prime(d, "plan_parallel");
  if (n < 1) throw std::invalid_argument("plan_parallel: n must be >= 1");
  if (m < 0) throw std::invalid_argument("plan_parallel: ancilla count must be >= 0");
  static std::mutex lock;
  static std::map<std::tuple<int, int, int>, ParallelPlan> cache;
  const auto key = std::make_tuple(d, n, m);
  {
    std::lock_guard<std::mutex> guard(lock);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const ParallelPlan plan = search_plan(d, n, m);
  std::lock_guard<std::mutex> guard(lock);
  cache.emplace(key, plan);
  return plan;
}

Circuit synth_parallel_with_plan(const DiagonalSpec& spec, int m, const ParallelPlan& plan, TransformMethod method) {
  spec.check();
  require_prime(spec.d, "synth_parallel");
  if (m < 0) throw std::invalid_argument("synth_parallel: ancilla count must be >= 0");
  if (plan.targets == 0) {
    const Circuit seq = synth_sequential(spec, method);
    if (m == 0) return seq;
    std::vector<int> map(static_cast<std::size_t>(spec.n));
    for (int q = 0; q < spec.n; ++q) map[static_cast<std::size_t>(q)] = q;
    return seq.remapped(QuditSystem{spec.d, spec.n, m}, map);
  }
  const int d = spec.d;
  const int n = spec.n;
  if ((plan.copies - 1) * n + plan.targets > m) throw std::invalid_argument("synth_parallel: plan needs more ancillas than m");

  DiagonalSpec relative = spec;
  for (double& b : relative.beta) b -= spec.beta[0];
  const AlphaVector alpha = transform_beta_to_alpha(relative, method);

  Circuit out(QuditSystem{d, n, m});
  if (spec.beta[0] != 0.0) out.append(GlobalPhase{spec.beta[0]});
  struct RealEmit {
    Circuit& out;
    const AlphaVector& alpha;
    void operator()(const Gate& g) const { out.append(g); }
    void operator()(const Gate& g, std::uint64_t direction) const {
      const auto s = to_digits(direction, alpha.d, alpha.n);
      out.append(DiagSingle{std::get<DiagSingle>(g).qudit, direction_phases(alpha, s)});
    }
  };
  const Layout lay{d, n, plan.copies, plan.targets};
  schedule(lay, programs_for(d, n, plan.targets, plan.split_digits), RealEmit{out, alpha});
  return out;
}

Circuit synth_parallel(const DiagonalSpec& spec, int m, TransformMethod method) {
  spec.check();
  return synth_parallel_with_plan(spec, m, plan_parallel(spec.d, spec.n, m), method);
}

}  // namespace qforge
