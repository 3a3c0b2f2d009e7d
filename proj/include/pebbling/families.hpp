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

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pebbling/graph.hpp"

namespace pebbling::family {

namespace detail {

inline void require_weight(Weight k) {
  if (k < 2) throw std::invalid_argument("edge weight must be at least 2, got " + std::to_string(k));
}

}  // namespace detail

inline Graph complete(std::size_t n, Weight k) {
  detail::require_weight(k);
  if (n == 0) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return undirected(n, pairs, k, "K" + std::to_string(n));
}

/// Vertices 0..m-1 in cyclic order.
inline Graph cycle(std::size_t m, Weight k) {
  detail::require_weight(k);
  if (m < 3) throw std::invalid_argument("cycle needs m >= 3");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 0; v < m; ++v) pairs.emplace_back(v, (v + 1) % m);
  return undirected(m, pairs, k, "C" + std::to_string(m));
}

inline Graph path(std::size_t n, Weight k) {
  detail::require_weight(k);
  if (n == 0) throw std::invalid_argument("path needs n >= 1");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
  return undirected(n, pairs, k, "P" + std::to_string(n));
}

/// Center 0, leaves 1..leaves.
inline Graph star(std::size_t leaves, Weight k) {
  detail::require_weight(k);
  if (leaves == 0) throw std::invalid_argument("star needs at least one leaf");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 1; v <= leaves; ++v) pairs.emplace_back(0, v);
  return undirected(leaves + 1, pairs, k, "S" + std::to_string(leaves));
}

/// Inward star: every leaf 1..leaves has a single edge into the center 0.
inline Graph instar(std::size_t leaves, Weight k) {
  detail::require_weight(k);
  if (leaves == 0) throw std::invalid_argument("instar needs at least one leaf");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({v, 0, k});
  return Graph(leaves + 1, std::move(edges), "R" + std::to_string(leaves));
}

/// Two vertices and the single directed edge 0 -> 1.
inline Graph arrow(Weight k) {
  detail::require_weight(k);
  return Graph(2, {{0, 1, k}}, "arrow" + std::to_string(k));
}

/// Product of two-vertex paths with the given weights.
inline Graph hypercube(const std::vector<Weight>& ks) {
  Graph g = complete(1, 2);
  for (Weight k : ks) g = cartesian_product(g, path(2, k));
  return g;
}

/// Product of arrow graphs; the all-ones vertex is the last id.
inline Graph arrow_cube(const std::vector<Weight>& ks) {
  Graph g = complete(1, 2);
  for (Weight k : ks) g = cartesian_product(g, arrow(k));
  return g;
}

/// Product of paths P_{n_i}^{(k_i)}.
inline Graph grid(const std::vector<std::pair<std::size_t, Weight>>& dims) {
  Graph g = complete(1, 2);
  for (auto [n, k] : dims) g = cartesian_product(g, path(n, k));
  return g;
}

inline Graph complete_bipartite(std::size_t m, std::size_t n, Weight k) {
  detail::require_weight(k);
  if (m == 0 || n == 0) throw std::invalid_argument("complete bipartite graph needs both sides non-empty");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = 0; v < n; ++v) pairs.emplace_back(u, m + v);
  return undirected(m + n, pairs, k, "K" + std::to_string(m) + "," + std::to_string(n));
}

/// Ascending list of the divisors of n.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisors need n >= 1");
  std::vector<std::int64_t> low, high;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      low.push_back(d);
      if (d != n / d) high.push_back(n / d);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

/// Divisor lattice D_n: divisors sorted ascending (id = rank, label = value),
/// an edge p -> d of weight d / p whenever p | d and p != d.
inline Graph divisor_lattice(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisor lattice needs n >= 1");
  auto divs = divisors(n);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < divs.size(); ++i) {
    for (Vertex j = i + 1; j < divs.size(); ++j) {
      if (divs[j] % divs[i] == 0) edges.push_back({i, j, static_cast<Weight>(divs[j] / divs[i])});
    }
  }
  return Graph(divs.size(), std::move(edges), "D" + std::to_string(n), divs);
}

/// Outer cycle 0..4, spokes i -- i+5, inner pentagram.
inline Graph petersen() {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);
    pairs.emplace_back(i, i + 5);
    pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return undirected(10, pairs, 2, "Petersen");
}

/// An 8-vertex Lemke graph: pebbling number 8 without the 2-pebbling
/// property. Eight pebbles on vertex 7 plus one on each of 3..6 cannot put
/// two pebbles on vertex 0.
inline Graph lemke() {
  static const std::vector<std::pair<Vertex, Vertex>> pairs = {
      {0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {1, 6}, {2, 5}, {3, 5}, {3, 7}, {4, 7}, {5, 7}, {6, 7}};
  return undirected(8, pairs, 2, "Lemke");
}

namespace detail {

inline std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

inline std::int64_t parse_int(const std::string& s, const std::string& context) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("invalid number '" + s + "' in family spec '" + context + "'");
  }
  return value;
}

inline std::size_t parse_count(const std::string& s, const std::string& context) {
  auto v = parse_int(s, context);
  if (v < 1) throw std::invalid_argument("parameter must be >= 1 in family spec '" + context + "'");
  return static_cast<std::size_t>(v);
}

inline Weight parse_weight(const std::string& s, const std::string& context) {
  auto v = parse_int(s, context);
  if (v < 2) throw std::invalid_argument("edge weight must be at least 2 in family spec '" + context + "'");
  return static_cast<Weight>(v);
}

inline Graph make_factor(const std::string& spec) {
  auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  auto arg = [&](std::size_t i) -> const std::string& {
    if (i >= parts.size()) throw std::invalid_argument("missing parameter in family spec '" + spec + "'");
    return parts[i];
  };
  auto weight_at = [&](std::size_t i) -> Weight {
    return i < parts.size() ? parse_weight(parts[i], spec) : 2;
  };
  auto expect_at_most = [&](std::size_t n) {
    if (parts.size() > n) throw std::invalid_argument("too many parameters in family spec '" + spec + "'");
  };

  if (kind == "complete") {
    expect_at_most(3);
    return complete(parse_count(arg(1), spec), weight_at(2));
  }
  if (kind == "cycle") {
    expect_at_most(3);
    return cycle(parse_count(arg(1), spec), weight_at(2));
  }
  if (kind == "path") {
    expect_at_most(3);
    return path(parse_count(arg(1), spec), weight_at(2));
  }
  if (kind == "star") {
    expect_at_most(3);
    return star(parse_count(arg(1), spec), weight_at(2));
  }
  if (kind == "instar") {
    expect_at_most(3);
    return instar(parse_count(arg(1), spec), weight_at(2));
  }
  if (kind == "arrow") {
    expect_at_most(2);
    return arrow(weight_at(1));
  }
  if (kind == "bipartite") {
    expect_at_most(4);
    return complete_bipartite(parse_count(arg(1), spec), parse_count(arg(2), spec), weight_at(3));
  }
  if (kind == "hypercube" || kind == "arrowcube") {
    expect_at_most(2);
    std::vector<Weight> ks;
    for (const auto& w : split(arg(1), ',')) ks.push_back(parse_weight(w, spec));
    return kind == "hypercube" ? hypercube(ks) : arrow_cube(ks);
  }
  if (kind == "grid") {
    // grid:n1:k1,n2:k2,... -- the weight after each length is optional.
    auto pos = spec.find(':');
    if (pos == std::string::npos) throw std::invalid_argument("missing parameter in family spec '" + spec + "'");
    std::vector<std::pair<std::size_t, Weight>> dims;
    for (const auto& dim : split(std::string_view(spec).substr(pos + 1), ',')) {
      auto nk = split(dim, ':');
      if (nk.size() > 2) throw std::invalid_argument("bad grid dimension '" + dim + "'");
      dims.emplace_back(parse_count(nk[0], spec), nk.size() == 2 ? parse_weight(nk[1], spec) : 2);
    }
    return grid(dims);
  }
  if (kind == "divisor" || kind == "divisor_lattice") {
    expect_at_most(2);
    return divisor_lattice(static_cast<std::int64_t>(parse_count(arg(1), spec)));
  }
  if (kind == "petersen") {
    expect_at_most(1);
    return petersen();
  }
  if (kind == "lemke") {
    expect_at_most(1);
    return lemke();
  }
  throw std::invalid_argument("unknown graph family '" + kind + "'");
}

}  // namespace detail

/// Parses the family DSL, e.g. "cycle:7:2" or "cycle:3:2 x path:3:2".
/// Factors joined by " x " form a Cartesian product, left factor major.
inline Graph make_family(std::string_view spec) {
  std::vector<std::string> factors;
  std::size_t start = 0;
  while (true) {
    auto pos = spec.find(" x ", start);
    factors.push_back(detail::trim(spec.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 3;
  }
  Graph result;
  bool first = true;
  for (const auto& f : factors) {
    if (f.empty()) throw std::invalid_argument("empty factor in family spec '" + std::string(spec) + "'");
    Graph g = detail::make_factor(f);
    result = first ? std::move(g) : cartesian_product(result, g);
    first = false;
  }
  return result;
}

}  // namespace pebbling::family
