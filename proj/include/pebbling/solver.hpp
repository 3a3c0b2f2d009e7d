// Copyright 2026 The Pebbling Toolkit Authors
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

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/graph.hpp"

namespace pebbling {

class illegal_step : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class search_limit_exceeded : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Fires one pebbling step: c(from) -= w(from, to), c(to) += 1.
inline Configuration apply_step(const Graph& g, const Configuration& c, Vertex from, Vertex to) {
  auto w = g.weight(from, to);
  if (!w) throw illegal_step("no edge " + std::to_string(from) + " -> " + std::to_string(to));
  if (c[from] < *w) {
    throw illegal_step("vertex " + std::to_string(from) + " holds " + std::to_string(c[from]) +
                       " pebbles, edge needs " + std::to_string(*w));
  }
  Configuration r = c;
  r[from] -= *w;
  r[to] += 1;
  return r;
}

/// Replays steps from c, throwing illegal_step at the first illegal one.
inline Configuration replay(const Graph& g, Configuration c, const StepSequence& steps) {
  if (c.vertex_count() != g.vertex_count()) throw std::invalid_argument("configuration does not fit graph");
  for (const Step& s : steps) c = apply_step(g, c, s.from, s.to);
  return c;
}

struct SolveResult {
  bool solvable = false;
  std::optional<StepSequence> witness;
  std::optional<Configuration> final;
};

/// Reads PEBBLE_SIZE_CAP, falling back to 4096 pebbles.
inline std::uint64_t default_size_cap() {
  if (const char* env = std::getenv("PEBBLE_SIZE_CAP")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 4096;
}

struct SearchOptions {
  std::uint64_t size_cap = default_size_cap();
  unsigned jobs = 1;
  bool progress = false;  // progress lines go to std::cerr
};

/// Integer form of the potential sum c(v) / P(v), where P(v) is the least
/// product of edge weights along a path from v to t: scale[v] = unit / P(v),
/// zero when t is unreachable. No step increases the potential, and a
/// configuration with n pebbles on t has potential at least n * unit.
struct PotentialScale {
  std::vector<std::uint64_t> scale;
  std::uint64_t unit = 1;
};

/// nullopt when the products or their lcm grow past 2^40.
inline std::optional<PotentialScale> potential_scale(const Graph& g, Vertex t) {
  constexpr std::uint64_t limit = std::uint64_t{1} << 40;
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> prod(n, 0);  // 0 = unreachable
  using Item = std::pair<std::uint64_t, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  prod[t] = 1;
  queue.push({1, t});
  while (!queue.empty()) {
    auto [p, v] = queue.top();
    queue.pop();
    if (p != prod[v]) continue;
    for (std::size_t idx : g.in_edge_indices(v)) {
      const Edge& e = g.edges()[idx];
      std::uint64_t q = p * e.weight;
      if (q > limit) return std::nullopt;
      if (prod[e.from] == 0 || q < prod[e.from]) {
        prod[e.from] = q;
        queue.push({q, e.from});
      }
    }
  }
  PotentialScale out;
  for (auto p : prod) {
    if (p == 0) continue;
    out.unit = std::lcm(out.unit, p);
    if (out.unit > limit) return std::nullopt;
  }
  out.scale.assign(n, 0);
  for (Vertex v = 0; v < n; ++v)
    if (prod[v] != 0) out.scale[v] = out.unit / prod[v];
  return out;
}

/// Exact n-fold t-solvability by depth-first search over configurations.
///
/// Every step removes at least one pebble, so the configuration graph is a
/// DAG and any configuration fully explored without success is unsolvable.
/// Those are remembered for the lifetime of the Solver, which makes repeated
/// queries on the same (graph, target, n) cheap. A potential argument prunes
/// hopeless states: with P(v) the minimum product of edge weights along a
/// path from v to t, sum c(v) / P(v) never increases under a step.
class Solver {
 public:
  Solver(const Graph& g, Vertex target, Count n) : g_(g), target_(target), n_(n) {
    if (target >= g.vertex_count()) throw std::invalid_argument("target out of range");
    init_potential();
  }

  const Graph& graph() const { return g_; }
  Vertex target() const { return target_; }
  Count fold() const { return n_; }

  bool solvable(const Configuration& c) {
    check(c);
    state_ = c.counts();
    return search(potential_of(state_), nullptr);
  }

  SolveResult solve(const Configuration& c) {
    check(c);
    state_ = c.counts();
    StepSequence trail;
    SolveResult result;
    result.solvable = search(potential_of(state_), &trail);
    if (result.solvable) {
      result.final = replay(g_, c, trail);
      result.witness = std::move(trail);
    }
    return result;
  }

  std::size_t memo_size() const { return unsolvable_.size() + solvable_.size(); }

 private:
  using Key = std::u16string;
  using Potential = unsigned __int128;

  void check(const Configuration& c) const {
    if (c.vertex_count() != g_.vertex_count()) throw std::invalid_argument("configuration does not fit graph");
    for (Count x : c.counts())
      if (x > std::numeric_limits<char16_t>::max()) throw std::invalid_argument("pebble count too large for solver");
  }

  void init_potential() {
    if (auto p = potential_scale(g_, target_)) {
      scale_ = std::move(p->scale);
      goal_ = static_cast<Potential>(n_) * p->unit;
    }
  }

  Potential potential_of(const std::vector<Count>& c) const {
    Potential total = 0;
    if (scale_.empty()) return total;
    for (std::size_t v = 0; v < c.size(); ++v) total += static_cast<Potential>(c[v]) * scale_[v];
    return total;
  }

  Key key_of(const std::vector<Count>& c) const {
    Key k(c.size(), u'\0');
    for (std::size_t v = 0; v < c.size(); ++v) k[v] = static_cast<char16_t>(c[v]);
    return k;
  }

  bool search(Potential potential, StepSequence* trail) {
    if (state_[target_] >= n_) return true;
    if (!scale_.empty() && potential < goal_) return false;
    Key key = key_of(state_);
    if (unsolvable_.count(key)) return false;
    if (trail == nullptr && solvable_.count(key)) return true;
    for (const Edge& e : g_.edges()) {
      if (state_[e.from] < e.weight) continue;
      state_[e.from] -= e.weight;
      state_[e.to] += 1;
      Potential next = potential;
      if (!scale_.empty()) next = potential - static_cast<Potential>(e.weight) * scale_[e.from] + scale_[e.to];
      if (trail) trail->push_back({e.from, e.to});
      bool ok = search(next, trail);
      state_[e.from] += e.weight;
      state_[e.to] -= 1;
      if (ok) {
        if (trail == nullptr) solvable_.insert(std::move(key));
        return true;
      }
      if (trail) trail->pop_back();
    }
    unsolvable_.insert(std::move(key));
    return false;
  }

  const Graph& g_;
  Vertex target_;
  Count n_;
  std::vector<Count> state_;
  std::vector<std::uint64_t> scale_;
  Potential goal_ = 0;
  std::unordered_set<Key> unsolvable_;
  std::unordered_set<Key> solvable_;
};

/// Decides n-fold t-solvability with a fresh memo and returns a replayable
/// witness when solvable.
inline SolveResult is_solvable(const Graph& g, const Configuration& c, Vertex t, Count n) {
  Solver solver(g, t, n);
  return solver.solve(c);
}

struct PebblingNumber {
  std::uint64_t value = 0;
  Configuration witness_unsolvable;  // size value - 1, not n-fold t-solvable
};

namespace detail {

/// Configurations of a fixed size with c(t) = j < n, split into blocks by
/// (j, count on the first non-target vertex). Concatenating the blocks in
/// order gives a fixed, deterministic enumeration order.
struct LevelBlock {
  Count on_target;
  Count on_first;
};

inline std::vector<LevelBlock> level_blocks(std::size_t vertex_count, Vertex t, Count n, std::uint64_t size) {
  std::vector<LevelBlock> blocks;
  for (Count j = 0; j < n && j <= size; ++j) {
    if (vertex_count == 1) {
      if (j == size) blocks.push_back({j, 0});
      continue;
    }
    std::uint64_t rest = size - j;
    for (std::uint64_t a = 0; a <= rest; ++a) {
      if (vertex_count == 2 && a != rest) continue;
      blocks.push_back({j, static_cast<Count>(a)});
    }
  }
  return blocks;
}

/// Calls visit(c) for every configuration in the block, stopping when visit
/// returns false.
template <typename Visit>
void for_each_in_block(std::size_t vertex_count, Vertex t, std::uint64_t size, const LevelBlock& block,
                       Visit&& visit) {
  Configuration c(vertex_count);
  c[t] = block.on_target;
  if (vertex_count == 1) {
    visit(c);
    return;
  }
  std::vector<Vertex> others;
  for (Vertex v = 0; v < vertex_count; ++v)
    if (v != t) others.push_back(v);
  c[others[0]] = block.on_first;
  std::uint64_t rest = size - block.on_target - block.on_first;
  if (others.size() == 1) {
    visit(c);
    return;
  }
  for (const Configuration& tail : enumerate_configs(others.size() - 1, rest)) {
    for (std::size_t i = 1; i < others.size(); ++i) c[others[i]] = tail[i - 1];
    if (!visit(c)) return;
  }
}

/// First unsolvable configuration of the given size in enumeration order,
/// searched with `jobs` workers. The result does not depend on `jobs`.
inline std::optional<Configuration> first_unsolvable_at(const Graph& g, Vertex t, Count n, std::uint64_t size,
                                                        unsigned jobs, std::vector<Solver>& solvers) {
  auto blocks = level_blocks(g.vertex_count(), t, n, size);
  if (blocks.empty()) return std::nullopt;
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(blocks.size())));
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best_block{blocks.size()};
  std::vector<std::optional<Configuration>> found(blocks.size());

  auto worker = [&](Solver& solver) {
    while (true) {
      std::size_t b = next.fetch_add(1);
      if (b >= blocks.size() || b > best_block.load()) return;
      for_each_in_block(g.vertex_count(), t, size, blocks[b], [&](const Configuration& c) {
        if (solver.solvable(c)) return true;
        found[b] = c;
        std::size_t cur = best_block.load();
        while (b < cur && !best_block.compare_exchange_weak(cur, b)) {
        }
        return false;
      });
    }
  };
  if (jobs == 1) {
    worker(solvers.at(0));
  } else {
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < jobs; ++i) threads.emplace_back(worker, std::ref(solvers.at(i)));
    for (auto& th : threads) th.join();
  }
  std::size_t b = best_block.load();
  if (b == blocks.size()) return std::nullopt;
  return found[b];
}

inline std::vector<Solver> make_solvers(const Graph& g, Vertex t, Count n, unsigned jobs) {
  std::vector<Solver> solvers;
  for (unsigned i = 0; i < std::max(1u, jobs); ++i) solvers.emplace_back(g, t, n);
  return solvers;
}

}  // namespace detail

/// pi_n(G, t): the least p with every size-p configuration n-fold
/// t-solvable, plus an unsolvable configuration of size p - 1.
///
/// Solvability is monotone in the configuration, so only exact sizes are
/// checked, climbing from 1. Each level first tries the previous witness
/// with one more pebble before falling back to full enumeration.
inline PebblingNumber pebbling_number(const Graph& g, Vertex t, Count n, const SearchOptions& options = {}) {
  if (t >= g.vertex_count()) throw std::invalid_argument("target out of range");
  if (n < 1) throw std::invalid_argument("pebbling number needs n >= 1");
  if (!all_reach(g, t)) {
    throw search_limit_exceeded("target " + std::to_string(t) + " is unreachable from some vertex");
  }
  auto solvers = detail::make_solvers(g, t, n, options.jobs);
  Configuration witness(g.vertex_count());  // size 0, unsolvable since n >= 1
  for (std::uint64_t p = 1;; ++p) {
    if (p > options.size_cap) {
      throw search_limit_exceeded("pebbling number search exceeded size cap " + std::to_string(options.size_cap));
    }
    std::optional<Configuration> unsolvable;
    for (Vertex v = 0; v < g.vertex_count() && !unsolvable; ++v) {
      Configuration candidate = witness;
      candidate[v] += 1;
      if (candidate[t] >= n) continue;
      if (!solvers[0].solvable(candidate)) unsolvable = candidate;
    }
    if (!unsolvable) unsolvable = detail::first_unsolvable_at(g, t, n, p, options.jobs, solvers);
    if (options.progress) {
      std::cerr << "size " << p << ": " << (unsolvable ? "unsolvable configuration found" : "all solvable") << '\n';
    }
    if (!unsolvable) return {p, witness};
    witness = *unsolvable;
  }
}

struct GraphPebblingNumber {
  std::uint64_t value = 0;
  Vertex target = 0;
  Configuration witness_unsolvable;
};

/// pi(G) = max over targets of pi(G, t).
inline GraphPebblingNumber pebbling_number_graph(const Graph& g, const SearchOptions& options = {}) {
  GraphPebblingNumber best;
  for (Vertex t = 0; t < g.vertex_count(); ++t) {
    auto r = pebbling_number(g, t, 1, options);
    if (t == 0 || r.value > best.value) best = {r.value, t, r.witness_unsolvable};
  }
  return best;
}

/// First (in enumeration order) size-`size` configuration that is not n-fold
/// t-solvable.
inline std::optional<Configuration> unsolvable_witness(const Graph& g, Vertex t, std::uint64_t size, Count n = 1) {
  if (t >= g.vertex_count()) throw std::invalid_argument("target out of range");
  auto solvers = detail::make_solvers(g, t, n, 1);
  return detail::first_unsolvable_at(g, t, n, size, 1, solvers);
}

enum class TwoPebblingVariant { support, odd };

struct TwoPebblingResult {
  bool holds = true;
  std::optional<std::pair<Configuration, Vertex>> counterexample;
};

/// Checks the 2-pebbling property given pi = pi(G): every configuration with
/// |c| >= 2 pi - q + 1 must be 2-fold solvable for every target, where q
/// counts occupied vertices (support) or vertices with an odd count (odd).
///
/// Sizes run up to 2 pi + 1: at that size every configuration is in the
/// window, so if all are 2-fold solvable then so is everything larger.
inline TwoPebblingResult has_2pp(const Graph& g, std::uint64_t pi,
                                 TwoPebblingVariant variant = TwoPebblingVariant::support) {
  const std::size_t nv = g.vertex_count();
  for (Vertex t = 0; t < nv; ++t) {
    if (!all_reach(g, t)) throw search_limit_exceeded("graph is not strongly connected");
  }
  auto q_of = [variant](const Configuration& c) -> std::uint64_t {
    if (variant == TwoPebblingVariant::support) return c.support_count();
    std::uint64_t q = 0;
    for (Count x : c.counts()) q += x % 2;
    return q;
  };
  const std::uint64_t top = 2 * pi + 1;
  const std::uint64_t bottom = top > nv ? top - nv : 0;
  for (Vertex t = 0; t < nv; ++t) {
    Solver solver(g, t, 2);
    for (std::uint64_t s = bottom; s <= top; ++s) {
      std::optional<Configuration> bad;
      for (const auto& block : detail::level_blocks(nv, t, 2, s)) {
        detail::for_each_in_block(nv, t, s, block, [&](const Configuration& c) {
          if (s + q_of(c) < top) return true;
          if (solver.solvable(c)) return true;
          bad = c;
          return false;
        });
        if (bad) break;
      }
      if (bad) return {false, std::make_pair(*bad, t)};
    }
  }
  return {true, std::nullopt};
}

struct OptimalPebbling {
  std::uint64_t value = 0;
  Configuration witness;
};

/// Smallest configuration solvable for every target; the first one found in
/// enumeration order is returned.
inline OptimalPebbling optimal_pebbling_number(const Graph& g, const SearchOptions& options = {}) {
  const std::size_t nv = g.vertex_count();
  std::vector<Solver> solvers;
  for (Vertex t = 0; t < nv; ++t) {
    if (!all_reach(g, t)) throw search_limit_exceeded("graph is not strongly connected");
    solvers.emplace_back(g, t, 1);
  }
  for (std::uint64_t s = 1; s <= options.size_cap; ++s) {
    for (const Configuration& c : enumerate_configs(nv, s)) {
      bool all = true;
      for (Vertex t = 0; t < nv && all; ++t) all = solvers[t].solvable(c);
      if (all) return {s, c};
    }
    if (options.progress) std::cerr << "size " << s << ": no configuration reaches every vertex\n";
  }
  throw search_limit_exceeded("optimal pebbling search exceeded size cap " + std::to_string(options.size_cap));
}

/// Minimal n-fold t-solvable configurations of size <= max_size: every
/// solvable configuration of size <= max_size contains one of them.
inline std::vector<Configuration> minimal_solvable_configs(const Graph& g, Vertex t, Count n, std::uint64_t max_size,
                                                           std::uint64_t budget) {
  Solver solver(g, t, n);
  std::vector<Configuration> minimal;
  std::uint64_t visited = 0;
  for (std::uint64_t s = 0; s <= max_size; ++s) {
    bool any_unsolvable = false;
    for (const Configuration& c : enumerate_configs(g.vertex_count(), s)) {
      if (++visited > budget) throw search_limit_exceeded("configuration budget exhausted");
      if (!solver.solvable(c)) {
        any_unsolvable = true;
        continue;
      }
      bool is_min = true;
      for (Vertex v = 0; v < g.vertex_count() && is_min; ++v) {
        if (c[v] == 0) continue;
        Configuration smaller = c;
        smaller[v] -= 1;
        is_min = !solver.solvable(smaller);
      }
      if (is_min) minimal.push_back(c);
    }
    // Past pi_n every configuration is solvable and none is minimal.
    if (!any_unsolvable) break;
  }
  return minimal;
}

/// Best k-reduced size of c - c* over n-fold t-solvable c* contained in c,
/// given the minimal solvable configurations. nullopt if no such c* exists.
inline std::optional<std::int64_t> best_residual(const Configuration& c, std::uint32_t k,
                                                 const std::vector<Configuration>& minimal,
                                                 Configuration* best_sub = nullptr) {
  std::optional<std::int64_t> best;
  for (const Configuration& m : minimal) {
    if (!m.is_subconfiguration_of(c)) continue;
    // Per vertex the residual is either kept whole or emptied; emptying pays
    // when fewer than k - 1 pebbles would remain there.
    Configuration residual = subtract(c, m);
    Configuration trimmed = residual;
    for (std::size_t v = 0; v < trimmed.vertex_count(); ++v)
      if (trimmed[v] > 0 && trimmed[v] < k - 1) trimmed[v] = 0;
    Configuration empty(c.vertex_count());
    for (const Configuration* r : {&residual, &trimmed, &empty}) {
      auto value = reduced_size(*r, k);
      if (!best || value > *best) {
        best = value;
        if (best_sub) *best_sub = subtract(c, *r);
      }
    }
  }
  return best;
}

struct TauCheck {
  bool holds = true;
  std::optional<std::pair<Configuration, std::uint64_t>> counterexample;  // (c, m)
  std::uint64_t checked = 0;
};

/// Bounded check of tau_{n,k}(G, t) <= p: for every m <= m_max and every c
/// with |c| = p - s#(c) + 1 + m, some n-fold t-solvable c* within c leaves
/// r_k(c - c*) >= m.
inline TauCheck verify_tau_detailed(const Graph& g, Vertex t, Count n, std::uint32_t k, std::uint64_t p,
                                    std::uint64_t m_max, std::uint64_t budget = 50'000'000) {
  if (t >= g.vertex_count()) throw std::invalid_argument("target out of range");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const std::size_t nv = g.vertex_count();
  const std::uint64_t max_size = p + m_max;  // s#(c) >= 1
  auto minimal = minimal_solvable_configs(g, t, n, max_size, budget);
  TauCheck result;
  for (std::uint64_t m = 0; m <= m_max; ++m) {
    for (std::size_t q = 1; q <= nv; ++q) {
      if (p + 1 + m < q) continue;
      std::uint64_t size = p + 1 + m - q;
      if (size < q) continue;
      for (const Configuration& c : enumerate_configs(nv, size)) {
        if (c.support_count() != q) continue;
        if (++result.checked > budget) throw search_limit_exceeded("configuration budget exhausted");
        auto best = best_residual(c, k, minimal);
        if (!best || *best < static_cast<std::int64_t>(m)) {
          result.holds = false;
          result.counterexample = std::make_pair(c, m);
          return result;
        }
      }
    }
  }
  return result;
}

inline bool verify_tau(const Graph& g, Vertex t, Count n, std::uint32_t k, std::uint64_t p, std::uint64_t m_max) {
  return verify_tau_detailed(g, t, n, k, p, m_max).holds;
}

/// pi_n(T, r) for a tree given as a symmetric skeleton, from the exact
/// maximum number of pebbles that can be gathered at a vertex of a tree:
/// gather(v) = c(v) + sum over children of floor(gather(child) / w).
/// Computes the largest configuration with gather(r) < n by a knapsack over
/// children. Works for arbitrary pebble counts.
inline std::uint64_t tree_pebbling_number(const Graph& tree, Vertex root, Count n) {
  const std::size_t nv = tree.vertex_count();
  if (root >= nv) throw std::invalid_argument("root out of range");
  if (!tree.is_symmetric() || tree.edge_count() != 2 * (nv - 1) || !all_reach(tree, root)) {
    throw std::invalid_argument("graph is not a tree");
  }
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  // Parent pointers and an order with children before parents.
  std::vector<Vertex> parent(nv, nv), order{root};
  std::vector<bool> seen(nv, false);
  seen[root] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const Edge& e : tree.out_edges(order[i])) {
      if (!seen[e.to]) {
        seen[e.to] = true;
        parent[e.to] = order[i];
        order.push_back(e.to);
      }
    }
  }
  // capacity[v]: largest gather value whose table we need at v.
  std::vector<std::uint64_t> capacity(nv, 0);
  capacity[root] = n - 1;
  for (Vertex v : order) {
    if (v == root) continue;
    std::uint64_t w = *tree.weight(v, parent[v]);
    capacity[v] = w * capacity[parent[v]] + w - 1;
  }
  // best[v][j]: max pebbles in the subtree of v with gather(v) <= j.
  std::vector<std::vector<std::uint64_t>> best(nv);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    const std::uint64_t cap = capacity[v];
    std::vector<std::uint64_t> f(cap + 1);
    std::iota(f.begin(), f.end(), std::uint64_t{0});  // everything on v itself
    for (const Edge& e : tree.out_edges(v)) {
      if (e.to == parent[v]) continue;
      const Vertex ch = e.to;
      const std::uint64_t w = *tree.weight(ch, v);
      std::vector<std::uint64_t> g(cap + 1, 0);
      for (std::uint64_t x = 0; x <= cap; ++x) {
        for (std::uint64_t a = 0; a <= x; ++a) g[x] = std::max(g[x], f[x - a] + best[ch][w * a + w - 1]);
      }
      f = std::move(g);
      best[ch].clear();
      best[ch].shrink_to_fit();
    }
    best[v] = std::move(f);
  }
  return best[root][n - 1] + 1;
}

}  // namespace pebbling
