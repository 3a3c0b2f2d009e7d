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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pebbling/graph.hpp"
#include "pebbling/simplex.hpp"
#include "pebbling/solver.hpp"

namespace pebbling {

namespace detail {

inline BigInt power(std::uint64_t base, std::uint64_t exp) {
  BigInt r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace detail

/// (n - 1)(k - 1) + 1 for the complete graph K_n^(k).
inline BigInt pi_complete(std::uint64_t n, std::uint64_t k) {
  if (n < 1 || k < 1) throw std::invalid_argument("pi_complete needs n >= 1 and k >= 1");
  return BigInt(n - 1) * (k - 1) + 1;
}

/// Treats g as an undirected skeleton: an edge in either direction joins
/// its endpoints.
inline bool is_tree(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(std::min(e.from, e.to), std::max(e.from, e.to));
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  if (pairs.size() != n - 1) return false;
  std::vector<Vertex> parent(n);
  for (Vertex v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [u, v] : pairs) {
    Vertex a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

/// Paths of a tree oriented toward the root, each listed from its deepest
/// vertex up to the vertex next to the root. Sizes are non-increasing.
struct PathPartition {
  Vertex root = 0;
  std::vector<std::vector<Vertex>> paths;

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> s;
    for (const auto& p : paths) s.push_back(p.size());
    return s;
  }
};

namespace detail {

inline std::vector<std::vector<Vertex>> undirected_neighbours(const Graph& g) {
  std::vector<std::vector<Vertex>> adj(g.vertex_count());
  for (const Edge& e : g.edges()) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}

inline void sort_paths(std::vector<std::vector<Vertex>>& paths) {
  std::stable_sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
}

/// Maximum path partition of the subtree hanging from v (away from parent),
/// with v itself appended to the longest path.
inline std::vector<std::vector<Vertex>> partition_below(const std::vector<std::vector<Vertex>>& adj, Vertex v,
                                                        Vertex parent) {
  std::vector<std::vector<Vertex>> paths;
  for (Vertex ch : adj[v]) {
    if (ch == parent) continue;
    auto sub = partition_below(adj, ch, v);
    paths.insert(paths.end(), sub.begin(), sub.end());
  }
  sort_paths(paths);
  if (paths.empty()) {
    paths.push_back({v});
  } else {
    paths.front().push_back(v);
  }
  return paths;
}

}  // namespace detail

/// Removes the root, partitions each remaining subtree recursively and lets
/// each subtree root extend its longest path. Ties go to the path whose
/// deepest vertex has the lowest id.
inline PathPartition max_path_partition(const Graph& tree, Vertex root) {
  if (root >= tree.vertex_count()) throw std::invalid_argument("root out of range");
  if (!is_tree(tree)) throw std::invalid_argument("graph is not a tree");
  auto adj = detail::undirected_neighbours(tree);
  PathPartition out{root, {}};
  for (Vertex v : adj[root]) {
    auto sub = detail::partition_below(adj, v, root);
    out.paths.insert(out.paths.end(), sub.begin(), sub.end());
  }
  detail::sort_paths(out.paths);
  return out;
}

/// n k^|V1| + k^|V2| + ... + k^|Vm| - m + 1 over the maximum path partition;
/// the single-vertex tree gives n.
inline BigInt pi_tree(const Graph& tree, Vertex root, std::uint64_t k, std::uint64_t n) {
  if (k < 2) throw std::invalid_argument("pi_tree needs k >= 2");
  if (n < 1) throw std::invalid_argument("pi_tree needs n >= 1");
  auto partition = max_path_partition(tree, root);
  if (partition.paths.empty()) return BigInt(n);
  BigInt total = 1;
  for (std::size_t i = 0; i < partition.paths.size(); ++i) {
    BigInt term = detail::power(k, partition.paths[i].size());
    total += (i == 0 ? term * n : term) - 1;
  }
  return total;
}

/// 2^j for m = 2j, 2 floor(2^(j+1) / 3) + 1 for m = 2j + 1.
inline BigInt pi_cycle(std::uint64_t m) {
  if (m < 3) throw std::invalid_argument("pi_cycle needs m >= 3");
  const std::uint64_t j = m / 2;
  if (m % 2 == 0) return detail::power(2, j);
  return 2 * (detail::power(2, j + 1) / 3) + 1;
}

inline BigInt pi_weighted_hypercube(const std::vector<std::uint64_t>& ks) {
  BigInt p = 1;
  for (auto k : ks) {
    if (k < 2) throw std::invalid_argument("hypercube weights must be >= 2");
    p *= k;
  }
  return p;
}

/// Product of k_i^(n_i - 1) for the grid of paths P_{n_i}^(k_i).
inline BigInt pi_grid(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& dims) {
  BigInt p = 1;
  for (auto [n, k] : dims) {
    if (n < 1) throw std::invalid_argument("grid path lengths must be >= 1");
    if (k < 2) throw std::invalid_argument("grid weights must be >= 2");
    p *= detail::power(k, n - 1);
  }
  return p;
}

inline BigInt pi_complete_bipartite(std::uint64_t m, std::uint64_t n) {
  if (m < 2 || n < 2) throw std::invalid_argument("pi_complete_bipartite needs m, n >= 2");
  return BigInt(m) + n;
}

/// C(k + n - 1, n - 1): configurations of k pebbles on n vertices.
inline BigInt config_count(std::uint64_t n, std::uint64_t k) {
  if (n < 1) throw std::invalid_argument("config_count needs n >= 1");
  BigInt r = 1;
  for (std::uint64_t i = 1; i < n; ++i) r = r * (k + i) / i;
  return r;
}

/// n k - n + 1 for the inward star with n leaves, target the centre.
inline BigInt pi_instar(std::uint64_t n, std::uint64_t k) {
  if (n < 1 || k < 2) throw std::invalid_argument("pi_instar needs n >= 1 and k >= 2");
  return BigInt(n) * k - n + 1;
}

/// #V + 1, valid for weight-2 graphs of diameter 2.
inline BigInt diameter2_bound(const Graph& g) {
  if (!g.uniform_weight(2)) throw std::invalid_argument("diameter-2 bound needs all edge weights 2");
  auto d = diameter(g);
  if (!d || *d != 2) throw std::invalid_argument("graph does not have diameter 2");
  return BigInt(g.vertex_count()) + 1;
}

struct Diameter2Class {
  BigInt bound;
  std::uint64_t pi = 0;
  int pebbling_class = 0;  // 0 when pi = #V, 1 when pi = #V + 1
};

/// Brute-forces pi(G) and compares it with #V.
inline Diameter2Class classify_diameter2(const Graph& g, const SearchOptions& options = {}) {
  Diameter2Class out;
  out.bound = diameter2_bound(g);
  out.pi = pebbling_number_graph(g, options).value;
  out.pebbling_class = out.pi == g.vertex_count() ? 0 : 1;
  return out;
}

}  // namespace pebbling
