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

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/simplex.hpp"

namespace pebbling {

/// Nonnegative rational weights on the vertices, aimed at a target.
struct WeightFunction {
  Vertex target = 0;
  std::vector<Rational> weights;
};

/// |w|
inline Rational weight_size(const WeightFunction& w) {
  Rational total = 0;
  for (const auto& x : w.weights) total += x;
  return total;
}

/// |w . c|
inline Rational weigh(const WeightFunction& w, const Configuration& c) {
  if (c.vertex_count() != w.weights.size()) throw std::invalid_argument("configuration does not fit weight function");
  Rational total = 0;
  for (std::size_t v = 0; v < c.vertex_count(); ++v) total += w.weights[v] * c[v];
  return total;
}

namespace detail {

inline void require_weight_two(const Graph& g) {
  if (!g.uniform_weight(2)) throw std::invalid_argument("weight functions need a graph with all edge weights 2");
}

inline void require_fits(const Graph& g, const WeightFunction& w) {
  if (w.weights.size() != g.vertex_count()) throw std::invalid_argument("weight function does not fit graph");
  if (w.target >= g.vertex_count()) throw std::invalid_argument("weight function target out of range");
}

}  // namespace detail

/// w(t) = 0, w >= 0, and every positive vertex not adjacent to t has an
/// out-neighbour of at least twice its weight.
inline bool validate_weight_function(const Graph& g, const WeightFunction& w) {
  detail::require_weight_two(g);
  detail::require_fits(g, w);
  if (w.weights[w.target] != 0) return false;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (w.weights[u] < 0) return false;
    if (w.weights[u] == 0 || g.has_edge(u, w.target)) continue;
    bool doubled = false;
    for (const Edge& e : g.out_edges(u)) doubled = doubled || w.weights[e.to] >= 2 * w.weights[u];
    if (!doubled) return false;
  }
  return true;
}

/// Greedy solution for a configuration with |w . c| > |w|: fire from the
/// lowest-id weighted vertex holding two pebbles, straight to t when
/// adjacent, else to its lowest-id out-neighbour of at least double weight.
/// The configuration weight never decreases along the way.
inline StepSequence wfl_solve(const Graph& g, const WeightFunction& w, Configuration c) {
  if (!validate_weight_function(g, w)) throw std::invalid_argument("not a valid weight function");
  const Vertex t = w.target;
  if (c[t] >= 1) return {};
  if (!(weigh(w, c) > weight_size(w))) {
    throw std::invalid_argument("configuration weight " + to_string(weigh(w, c)) + " does not exceed |w| = " +
                                to_string(weight_size(w)));
  }
  StepSequence steps;
  while (c[t] == 0) {
    std::optional<Step> step;
    for (Vertex u = 0; u < g.vertex_count() && !step; ++u) {
      if (w.weights[u] == 0 || c[u] < 2) continue;
      if (g.has_edge(u, t)) {
        step = Step{u, t};
        break;
      }
      for (const Edge& e : g.out_edges(u)) {
        if (w.weights[e.to] >= 2 * w.weights[u]) {
          step = Step{u, e.to};
          break;
        }
      }
    }
    if (!step) throw std::logic_error("no weighted vertex can fire");
    c[step->from] -= 2;
    c[step->to] += 1;
    steps.push_back(*step);
  }
  return steps;
}

namespace detail {

inline Vertex common_target(const Graph& g, const std::vector<WeightFunction>& ws) {
  if (ws.empty()) throw std::invalid_argument("need at least one weight function");
  for (const auto& w : ws) {
    detail::require_fits(g, w);
    if (w.target != ws[0].target) throw std::invalid_argument("weight functions have different targets");
    if (!validate_weight_function(g, w)) throw std::invalid_argument("not a valid weight function");
  }
  return ws[0].target;
}

}  // namespace detail

/// floor(|w| / m) + 1 for w the sum of the given functions and m its least
/// positive value. The sum must be positive away from the target.
inline BigInt covering_bound(const Graph& g, const std::vector<WeightFunction>& ws) {
  const Vertex t = detail::common_target(g, ws);
  std::vector<Rational> sum(g.vertex_count(), 0);
  for (const auto& w : ws)
    for (Vertex v = 0; v < g.vertex_count(); ++v) sum[v] += w.weights[v];
  std::optional<Rational> least;
  Rational total = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == t) continue;
    if (sum[v] == 0) throw std::invalid_argument("weight functions do not cover vertex " + std::to_string(v));
    if (!least || sum[v] < *least) least = sum[v];
    total += sum[v];
  }
  if (!least) return 1;  // single-vertex graph
  return floor(total / *least) + 1;
}

/// Mirror pair on the cycle 0..m-1: the vertex at clockwise distance i from
/// t gets 2^(h - i) for 1 <= i <= h, h = ceil(m / 2), in the first function;
/// the second uses counter-clockwise distance.
inline std::pair<WeightFunction, WeightFunction> cycle_weight_functions(std::size_t m, Vertex t) {
  if (m < 3) throw std::invalid_argument("cycle needs m >= 3");
  if (t >= m) throw std::invalid_argument("target out of range");
  const std::size_t h = (m + 1) / 2;
  WeightFunction w1{t, std::vector<Rational>(m, 0)}, w2{t, std::vector<Rational>(m, 0)};
  for (std::size_t i = 1; i <= h; ++i) {
    Rational value = Rational(BigInt(1) << (h - i));
    w1.weights[(t + i) % m] = value;
    w2.weights[(t + m - i) % m] = value;
  }
  return {w1, w2};
}

struct LpBound {
  BigInt bound;
  LpSolution solution;  // primal indexed by vertex, target entry 0
};

/// floor(max |c|) + 1 over fractional c >= 0 with c(t) = 0 and
/// |w_i . c| <= |w_i| for every given function.
inline LpBound lp_bound(const Graph& g, Vertex t, const std::vector<WeightFunction>& ws) {
  if (detail::common_target(g, ws) != t) throw std::invalid_argument("weight functions aim at another target");
  std::vector<Vertex> vars;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (v != t) vars.push_back(v);
  LinearProgram lp;
  lp.objective.assign(vars.size(), 1);
  for (const auto& w : ws) {
    LinearConstraint con;
    for (Vertex v : vars) con.coefficients.push_back(w.weights[v]);
    con.bound = weight_size(w);
    lp.constraints.push_back(std::move(con));
  }
  LpSolution sol;
  try {
    sol = simplex_max(lp);
  } catch (const lp_unbounded&) {
    throw lp_unbounded("weight functions do not cover the graph: the bound is unbounded");
  }
  LpBound out;
  out.bound = floor(sol.optimum) + 1;
  out.solution.optimum = sol.optimum;
  out.solution.dual = sol.dual;
  out.solution.primal.assign(g.vertex_count(), 0);
  for (std::size_t i = 0; i < vars.size(); ++i) out.solution.primal[vars[i]] = sol.primal[i];
  return out;
}

}  // namespace pebbling
