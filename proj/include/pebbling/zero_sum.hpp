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
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/families.hpp"
#include "pebbling/flow.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/solver.hpp"

namespace pebbling {

/// Sorted 1-based positions into a sequence.
using IndexSet = std::vector<std::size_t>;

class contract_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Contiguous run i+1..j whose sum is 0 mod n, from the first repeated
/// prefix sum among the first n + 1 prefixes (smallest j, then smallest i).
inline IndexSet zero_sum_mod(const std::vector<std::int64_t>& seq, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("modulus must be >= 1");
  if (seq.size() < static_cast<std::size_t>(n)) {
    throw std::invalid_argument("sequence of length " + std::to_string(seq.size()) + " is shorter than modulus " +
                                std::to_string(n));
  }
  std::vector<std::int64_t> first_seen(static_cast<std::size_t>(n), -1);
  std::int64_t prefix = 0;
  first_seen[0] = 0;
  for (std::size_t j = 1; j <= static_cast<std::size_t>(n); ++j) {
    prefix = ((prefix + seq[j - 1] % n) % n + n) % n;
    auto& seen = first_seen[static_cast<std::size_t>(prefix)];
    if (seen >= 0) {
      IndexSet out;
      for (std::size_t k = static_cast<std::size_t>(seen) + 1; k <= j; ++k) out.push_back(k);
      return out;
    }
    seen = static_cast<std::int64_t>(j);
  }
  throw std::logic_error("pigeonhole failed");  // n + 1 prefixes, n residues
}

/// combiner(u, v, sets) gets the k sets popped from u for a step (u, v) of
/// weight k and returns a non-empty subset of their union for v.
using Combiner = std::function<IndexSet(Vertex, Vertex, const std::vector<IndexSet>&)>;
using WellPlaced = std::function<bool(Vertex, const IndexSet&)>;

/// Replays steps with an index set riding on every pebble. placements[i] is
/// the vertex of index i + 1. Each step pops sets first-in first-out and
/// pushes the combiner's result; the answer is the first set on t.
inline IndexSet pebbling_construction(const Graph& g, Vertex t, const std::vector<Vertex>& placements,
                                      const Combiner& combiner, const StepSequence& steps,
                                      const WellPlaced& well_placed = nullptr) {
  if (t >= g.vertex_count()) throw std::invalid_argument("target out of range");
  std::vector<std::deque<IndexSet>> queues(g.vertex_count());
  for (std::size_t i = 0; i < placements.size(); ++i) {
    if (placements[i] >= g.vertex_count()) throw std::invalid_argument("placement out of range");
    IndexSet single{i + 1};
    if (well_placed && !well_placed(placements[i], single)) {
      throw contract_violation("index " + std::to_string(i + 1) + " is not well placed");
    }
    queues[placements[i]].push_back(std::move(single));
  }
  for (const Step& s : steps) {
    auto w = g.weight(s.from, s.to);
    if (!w) throw illegal_step("no edge " + std::to_string(s.from) + " -> " + std::to_string(s.to));
    auto& source = queues[s.from];
    if (source.size() < *w) {
      throw illegal_step("vertex " + std::to_string(s.from) + " holds " + std::to_string(source.size()) +
                         " pebbles, edge needs " + std::to_string(*w));
    }
    std::vector<IndexSet> popped(source.begin(), source.begin() + *w);
    source.erase(source.begin(), source.begin() + *w);
    IndexSet merged;
    for (const auto& set : popped) merged.insert(merged.end(), set.begin(), set.end());
    std::sort(merged.begin(), merged.end());
    IndexSet result = combiner(s.from, s.to, popped);
    std::sort(result.begin(), result.end());
    if (result.empty()) throw contract_violation("combiner returned an empty set");
    if (std::adjacent_find(result.begin(), result.end()) != result.end()) {
      throw contract_violation("combiner returned a repeated index");
    }
    if (!std::includes(merged.begin(), merged.end(), result.begin(), result.end())) {
      throw contract_violation("combiner result is not a subset of the popped sets");
    }
    if (well_placed && !well_placed(s.to, result)) {
      throw contract_violation("combiner result is not well placed at vertex " + std::to_string(s.to));
    }
    queues[s.to].push_back(std::move(result));
  }
  if (queues[t].empty()) throw std::invalid_argument("steps leave no pebble on the target");
  return queues[t].front();
}

namespace detail {

inline StepSequence reach_target(const Graph& g, const Configuration& c, Vertex t) {
  auto flow = solve_via_flow(g, c, t, 1);
  if (!flow) throw std::logic_error("counting configuration is not solvable");
  return realize(g, *flow).steps;
}

inline std::vector<Vertex> place_by_label(const Graph& g, const std::vector<std::int64_t>& labels) {
  std::vector<Vertex> out;
  for (auto label : labels) out.push_back(*g.vertex_with_label(label));
  return out;
}

inline Configuration counting_configuration(const Graph& g, const std::vector<Vertex>& placements) {
  Configuration c(g.vertex_count());
  for (Vertex v : placements) c[v] += 1;
  return c;
}

inline std::int64_t sum_at(const std::vector<std::int64_t>& seq, const IndexSet& s) {
  std::int64_t total = 0;
  for (auto i : s) total += seq[i - 1];
  return total;
}

}  // namespace detail

/// n divisors of n always contain a subsequence summing to exactly n. The
/// pebble for a_i starts on the lattice vertex a_i; merging k sets along an
/// edge (d, kd) keeps all of them.
inline IndexSet divisor_zero_sum(std::int64_t n, const std::vector<std::int64_t>& a) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (a.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("expected " + std::to_string(n) + " divisors, got " + std::to_string(a.size()));
  }
  for (auto x : a) {
    if (x < 1 || n % x != 0) throw std::invalid_argument(std::to_string(x) + " does not divide " + std::to_string(n));
  }
  Graph d = family::divisor_lattice(n);
  const Vertex t = *d.vertex_with_label(n);
  auto placements = detail::place_by_label(d, a);
  auto steps = detail::reach_target(d, detail::counting_configuration(d, placements), t);
  Combiner keep_all = [](Vertex, Vertex, const std::vector<IndexSet>& sets) {
    IndexSet out;
    for (const auto& s : sets) out.insert(out.end(), s.begin(), s.end());
    return out;
  };
  WellPlaced sums_to_label = [&](Vertex v, const IndexSet& s) { return detail::sum_at(a, s) == d.label(v); };
  IndexSet result = pebbling_construction(d, t, placements, keep_all, steps, sums_to_label);
  if (detail::sum_at(a, result) != n) throw contract_violation("divisor zero-sum result does not sum to n");
  return result;
}

/// Any n positive integers contain a non-empty S with n | sum a_i and
/// sum gcd(n, a_i) <= n. Pebbles start on the lattice vertex gcd(n, a_i);
/// along an edge (d, kd) the k set sums divided by d are fed to the prefix
/// sum argument modulo k.
inline IndexSet gcd_zero_sum(std::int64_t n, const std::vector<std::int64_t>& a) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (a.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("expected " + std::to_string(n) + " integers, got " + std::to_string(a.size()));
  }
  for (auto x : a)
    if (x < 1) throw std::invalid_argument("entries must be positive");
  Graph d = family::divisor_lattice(n);
  const Vertex t = *d.vertex_with_label(n);
  std::vector<std::int64_t> gcds;
  for (auto x : a) gcds.push_back(std::gcd(n, x));
  auto placements = detail::place_by_label(d, gcds);
  auto steps = detail::reach_target(d, detail::counting_configuration(d, placements), t);
  Combiner select = [&](Vertex u, Vertex, const std::vector<IndexSet>& sets) {
    const std::int64_t base = d.label(u);
    std::vector<std::int64_t> r;
    for (const auto& s : sets) r.push_back(detail::sum_at(a, s) / base);
    IndexSet out;
    for (auto i : zero_sum_mod(r, static_cast<std::int64_t>(sets.size())))
      out.insert(out.end(), sets[i - 1].begin(), sets[i - 1].end());
    return out;
  };
  WellPlaced divisible_and_small = [&](Vertex v, const IndexSet& s) {
    return detail::sum_at(a, s) % d.label(v) == 0 && detail::sum_at(gcds, s) <= d.label(v);
  };
  IndexSet result = pebbling_construction(d, t, placements, select, steps, divisible_and_small);
  if (detail::sum_at(a, result) % n != 0 || detail::sum_at(gcds, result) > n) {
    throw contract_violation("gcd zero-sum result fails its guarantee");
  }
  return result;
}

/// d divisors of n with d | n contain a non-empty S whose sum is a multiple
/// of d and at most n.
inline IndexSet erdos_lemke(std::int64_t n, std::int64_t d, const std::vector<std::int64_t>& a) {
  if (n < 1 || d < 1) throw std::invalid_argument("n and d must be >= 1");
  if (n % d != 0) throw std::invalid_argument(std::to_string(d) + " does not divide " + std::to_string(n));
  if (a.size() != static_cast<std::size_t>(d)) {
    throw std::invalid_argument("expected " + std::to_string(d) + " integers, got " + std::to_string(a.size()));
  }
  for (auto x : a) {
    if (x < 1 || n % x != 0) throw std::invalid_argument(std::to_string(x) + " does not divide " + std::to_string(n));
  }
  IndexSet result = gcd_zero_sum(d, a);
  const std::int64_t sum = detail::sum_at(a, result);
  if (sum % d != 0 || sum > n) throw contract_violation("Erdos-Lemke result fails its guarantee");
  return result;
}

}  // namespace pebbling
