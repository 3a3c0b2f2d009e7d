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

// Hand-rolled random and exhaustive generators. Every random generator
// takes an explicitly seeded Rng so failures replay.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/flow.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/weight_function.hpp"

namespace gen {

using namespace pebbling;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(eng_); }
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 eng_;
};

/// Random weighted digraph: each ordered pair gets an edge with probability
/// density, weight drawn from weights. symmetric mirrors every edge.
inline Graph random_graph(Rng& rng, std::size_t nv, const std::vector<Weight>& weights, double density,
                          bool symmetric) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < nv; ++u) {
    for (Vertex v = 0; v < nv; ++v) {
      if (u == v || (symmetric && v < u)) continue;
      if (!rng.coin(density)) continue;
      Weight w = rng.pick(weights);
      edges.push_back({u, v, w});
      if (symmetric) edges.push_back({v, u, w});
    }
  }
  return Graph(nv, std::move(edges));
}

/// Random connected graph: a random spanning tree plus extra edges. Edge
/// directions are independent unless symmetric.
inline Graph random_connected(Rng& rng, std::size_t nv, const std::vector<Weight>& weights, double extra,
                              bool symmetric) {
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 1; v < nv; ++v) {
    Vertex u = rng.below(v);
    pairs.insert({u, v});
  }
  for (Vertex u = 0; u < nv; ++u)
    for (Vertex v = u + 1; v < nv; ++v)
      if (rng.coin(extra)) pairs.insert({u, v});
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) {
    Weight w = rng.pick(weights);
    edges.push_back({u, v, w});
    edges.push_back({v, u, symmetric ? w : rng.pick(weights)});
  }
  return Graph(nv, std::move(edges));
}

/// Every connected graph on nv labelled vertices whose edges come in
/// symmetric pairs, each pair weighted from weights. With per_direction the
/// two arcs of a pair take their weights independently.
inline std::vector<Graph> connected_symmetric_graphs(std::size_t nv, const std::vector<Weight>& weights,
                                                     bool per_direction = false) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 0; u < nv; ++u)
    for (Vertex v = u + 1; v < nv; ++v) slots.push_back({u, v});
  const std::size_t w = weights.size();
  const std::size_t choices = 1 + (per_direction ? w * w : w);
  std::vector<Graph> out;
  std::vector<std::size_t> pick(slots.size(), 0);  // 0 absent, else 1 + weight choice
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == slots.size()) {
      std::vector<Edge> edges;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (pick[s] == 0) continue;
        std::size_t c = pick[s] - 1;
        Weight forward = weights[per_direction ? c / w : c];
        Weight backward = weights[per_direction ? c % w : c];
        edges.push_back({slots[s].first, slots[s].second, forward});
        edges.push_back({slots[s].second, slots[s].first, backward});
      }
      Graph g(nv, std::move(edges));
      if (all_reach(g, 0)) out.push_back(std::move(g));
      return;
    }
    for (std::size_t c = 0; c < choices; ++c) {
      pick[i] = c;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

inline Configuration random_config(Rng& rng, std::size_t nv, std::uint64_t size) {
  Configuration c(nv);
  for (std::uint64_t i = 0; i < size; ++i) c[rng.below(nv)] += 1;
  return c;
}

/// Random flow with each edge carrying up to max_flow.
inline PebbleFlow random_flow(Rng& rng, const Graph& g, const Configuration& c, std::uint64_t max_flow) {
  PebbleFlow f = zero_flow(g, c);
  for (auto& x : f.flow) x = rng.below(max_flow + 1);
  return f;
}

/// Random flow with non-negative excess: flows are added one edge unit at
/// a time while the tail keeps non-negative excess.
inline PebbleFlow random_feasible_flow(Rng& rng, const Graph& g, const Configuration& c, std::size_t attempts) {
  PebbleFlow f = zero_flow(g, c);
  if (g.edge_count() == 0) return f;
  for (std::size_t i = 0; i < attempts; ++i) {
    std::size_t idx = rng.below(g.edge_count());
    f.flow[idx] += 1;
    if (excess(g, f, g.edges()[idx].from) < 0) f.flow[idx] -= 1;
  }
  return f;
}

/// Random valid weight function on a weight-2 graph. Vertices are visited
/// in order of distance to t; a vertex next to t takes any weight, a farther
/// one takes zero or at most half the weight of some out-neighbour already
/// assigned.
inline WeightFunction random_weight_function(Rng& rng, const Graph& g, Vertex t) {
  auto dist = distances_to(g, t);
  std::vector<Vertex> order;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (v != t && dist[v] != static_cast<std::size_t>(-1)) order.push_back(v);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
  WeightFunction w{t, std::vector<Rational>(g.vertex_count(), 0)};
  for (Vertex v : order) {
    if (rng.coin(0.15)) continue;
    if (g.has_edge(v, t)) {
      w.weights[v] = Rational(static_cast<long long>(rng.between(1, 8)), static_cast<long long>(rng.between(1, 3)));
      continue;
    }
    Rational cap = 0;
    for (const Edge& e : g.out_edges(v)) cap = std::max(cap, Rational(w.weights[e.to] / 2));
    if (cap == 0) continue;
    w.weights[v] = cap / static_cast<long long>(rng.between(1, 3));
  }
  return w;
}

/// Random labelled tree from a Pruefer sequence, every edge weight k.
inline Graph random_tree(Rng& rng, std::size_t nv, Weight k) {
  if (nv == 1) return Graph(1, {});
  if (nv == 2) return undirected(2, {{0, 1}}, k);
  std::vector<Vertex> code(nv - 2);
  for (auto& x : code) x = rng.below(nv);
  std::vector<std::size_t> degree(nv, 1);
  for (auto x : code) ++degree[x];
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (auto x : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    pairs.push_back({leaf, x});
    --degree[leaf];
    --degree[x];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < nv; ++v)
    if (degree[v] == 1) last.push_back(v);
  pairs.push_back({last[0], last[1]});
  return undirected(nv, pairs, k);
}

/// One representative (tree, root) per isomorphism class of rooted trees
/// on nv vertices, found by decoding every Pruefer sequence and keeping the
/// first tree for each canonical nested-parenthesis form.
inline std::vector<std::pair<Graph, Vertex>> rooted_trees(std::size_t nv, Weight k) {
  std::vector<std::pair<Graph, Vertex>> out;
  std::set<std::string> seen;
  auto canon = [](const Graph& g, Vertex root) {
    std::function<std::string(Vertex, Vertex)> rec = [&](Vertex v, Vertex parent) {
      std::vector<std::string> parts;
      for (const Edge& e : g.out_edges(v))
        if (e.to != parent) parts.push_back(rec(e.to, v));
      std::sort(parts.begin(), parts.end());
      std::string s = "(";
      for (const auto& p : parts) s += p;
      return s + ")";
    };
    return rec(root, g.vertex_count());
  };
  auto consider = [&](const Graph& g) {
    for (Vertex r = 0; r < nv; ++r)
      if (seen.insert(canon(g, r)).second) out.push_back({g, r});
  };
  if (nv <= 2) {
    consider(nv == 1 ? Graph(1, {}) : undirected(2, {{0, 1}}, k));
    return out;
  }
  std::vector<Vertex> code(nv - 2, 0);
  while (true) {
    std::vector<std::size_t> degree(nv, 1);
    for (auto x : code) ++degree[x];
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (auto x : code) {
      Vertex leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      pairs.push_back({leaf, x});
      --degree[leaf];
      --degree[x];
    }
    std::vector<Vertex> last;
    for (Vertex v = 0; v < nv; ++v)
      if (degree[v] == 1) last.push_back(v);
    pairs.push_back({last[0], last[1]});
    consider(undirected(nv, pairs, k));
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == nv) code[i++] = 0;
    if (i == code.size()) break;
  }
  return out;
}

}  // namespace gen
