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
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pebbling {

using Vertex = std::size_t;
using Weight = std::uint32_t;

struct Edge {
  Vertex from = 0;
  Vertex to = 0;
  Weight weight = 2;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A single pebbling step along the edge (from, to).
struct Step {
  Vertex from = 0;
  Vertex to = 0;

  friend bool operator==(const Step&, const Step&) = default;
};

using StepSequence = std::vector<Step>;

/// Edge-weighted digraph on the dense vertex set 0..n-1.
///
/// Edges are kept sorted by (from, to); every weight is at least two, there
/// are no self-loops and at most one edge per ordered pair. An optional
/// integer label per vertex carries domain data such as divisor values.
class Graph {
 public:
  Graph() : Graph(1, {}) {}

  Graph(std::size_t vertex_count, std::vector<Edge> edges, std::string name = {},
        std::vector<std::int64_t> labels = {})
      : vertex_count_(vertex_count),
        edges_(std::move(edges)),
        name_(std::move(name)),
        labels_(std::move(labels)) {
    if (vertex_count_ == 0) {
      throw std::invalid_argument("graph must have at least one vertex");
    }
    if (!labels_.empty() && labels_.size() != vertex_count_) {
      throw std::invalid_argument("label count does not match vertex count");
    }
    for (const Edge& e : edges_) {
      if (e.from >= vertex_count_ || e.to >= vertex_count_) {
        throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.from) +
                                    " -> " + std::to_string(e.to));
      }
      if (e.from == e.to) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(e.from));
      }
      if (e.weight < 2) {
        throw std::invalid_argument("edge weight must be at least 2");
      }
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      return std::pair(a.from, a.to) < std::pair(b.from, b.to);
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
      if (edges_[i].from == edges_[i - 1].from && edges_[i].to == edges_[i - 1].to) {
        throw std::invalid_argument("duplicate edge " + std::to_string(edges_[i].from) + " -> " +
                                    std::to_string(edges_[i].to));
      }
    }
    out_offset_.assign(vertex_count_ + 1, 0);
    for (const Edge& e : edges_) ++out_offset_[e.from + 1];
    for (std::size_t v = 0; v < vertex_count_; ++v) out_offset_[v + 1] += out_offset_[v];
    in_edges_.assign(vertex_count_, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) in_edges_[edges_[i].to].push_back(i);
  }

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& name() const { return name_; }

  std::span<const Edge> out_edges(Vertex v) const {
    return {edges_.data() + out_offset_[v], edges_.data() + out_offset_[v + 1]};
  }

  /// Indices into edges() of the edges ending at v.
  const std::vector<std::size_t>& in_edge_indices(Vertex v) const { return in_edges_[v]; }

  /// Index of (from, to) in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex from, Vertex to) const {
    if (from >= vertex_count_) return std::nullopt;
    auto first = edges_.begin() + static_cast<std::ptrdiff_t>(out_offset_[from]);
    auto last = edges_.begin() + static_cast<std::ptrdiff_t>(out_offset_[from + 1]);
    auto it = std::lower_bound(first, last, to, [](const Edge& e, Vertex v) { return e.to < v; });
    if (it == last || it->to != to) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  bool has_edge(Vertex from, Vertex to) const { return edge_index(from, to).has_value(); }

  std::optional<Weight> weight(Vertex from, Vertex to) const {
    auto idx = edge_index(from, to);
    if (!idx) return std::nullopt;
    return edges_[*idx].weight;
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::int64_t>& labels() const { return labels_; }
  std::int64_t label(Vertex v) const { return labels_.empty() ? static_cast<std::int64_t>(v) : labels_[v]; }

  /// Vertex carrying the given label (labels are searched linearly).
  std::optional<Vertex> vertex_with_label(std::int64_t label) const {
    for (Vertex v = 0; v < vertex_count_; ++v) {
      if (this->label(v) == label) return v;
    }
    return std::nullopt;
  }

  /// True when every edge weight equals w.
  bool uniform_weight(Weight w) const {
    return std::all_of(edges_.begin(), edges_.end(), [w](const Edge& e) { return e.weight == w; });
  }

  /// True when every edge has a reverse edge of the same weight.
  bool is_symmetric() const {
    return std::all_of(edges_.begin(), edges_.end(), [this](const Edge& e) {
      auto w = weight(e.to, e.from);
      return w && *w == e.weight;
    });
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::string name_;
  std::vector<std::int64_t> labels_;
  std::vector<std::size_t> out_offset_;
  std::vector<std::vector<std::size_t>> in_edges_;
};

/// Builds G^(k) from an undirected edge list: both directions, weight k.
inline Graph undirected(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& pairs,
                        Weight k, std::string name = {}) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size() * 2);
  for (auto [u, v] : pairs) {
    edges.push_back({u, v, k});
    edges.push_back({v, u, k});
  }
  return Graph(vertex_count, std::move(edges), std::move(name));
}

/// G □ H. Vertex (g, h) gets id g * |V(H)| + h.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t nh = h.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() * nh + h.edge_count() * g.vertex_count());
  for (const Edge& e : g.edges()) {
    for (Vertex y = 0; y < nh; ++y) edges.push_back({e.from * nh + y, e.to * nh + y, e.weight});
  }
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    for (const Edge& e : h.edges()) edges.push_back({x * nh + e.from, x * nh + e.to, e.weight});
  }
  std::string name;
  if (!g.name().empty() && !h.name().empty()) name = g.name() + " x " + h.name();
  return Graph(g.vertex_count() * nh, std::move(edges), std::move(name));
}

/// Longest shortest-path length in edges, ignoring weights; nullopt when some
/// vertex cannot reach another.
inline std::optional<std::size_t> diameter(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t unreached = std::numeric_limits<std::size_t>::max();
  std::size_t best = 0;
  std::vector<std::size_t> dist(n);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), unreached);
    dist[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (const Edge& e : g.out_edges(u)) {
        if (dist[e.to] == unreached) {
          dist[e.to] = dist[u] + 1;
          queue.push_back(e.to);
        }
      }
    }
    for (std::size_t d : dist) {
      if (d == unreached) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

/// Edge-count distance from every vertex to t along directed edges.
inline std::vector<std::size_t> distances_to(const Graph& g, Vertex t) {
  constexpr std::size_t unreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.vertex_count(), unreached);
  dist[t] = 0;
  std::deque<Vertex> queue{t};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (std::size_t idx : g.in_edge_indices(v)) {
      Vertex u = g.edges()[idx].from;
      if (dist[u] == unreached) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

/// Whether every vertex can reach t.
inline bool all_reach(const Graph& g, Vertex t) {
  auto dist = distances_to(g, t);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::size_t d) { return d == std::numeric_limits<std::size_t>::max(); });
}

}  // namespace pebbling
