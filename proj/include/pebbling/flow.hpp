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
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/simplex.hpp"
#include "pebbling/solver.hpp"

namespace pebbling {

/// A configuration plus the number of pebbles delivered along each edge.
/// flow[i] belongs to g.edges()[i] of the graph the flow was built for.
struct PebbleFlow {
  Configuration config;
  std::vector<std::uint64_t> flow;

  friend bool operator==(const PebbleFlow&, const PebbleFlow&) = default;
};

inline PebbleFlow zero_flow(const Graph& g, Configuration c) {
  if (c.vertex_count() != g.vertex_count()) throw std::invalid_argument("configuration does not fit graph");
  return {std::move(c), std::vector<std::uint64_t>(g.edge_count(), 0)};
}

namespace detail {

inline void require_fits(const Graph& g, const PebbleFlow& f) {
  if (f.config.vertex_count() != g.vertex_count() || f.flow.size() != g.edge_count()) {
    throw std::invalid_argument("flow does not fit graph");
  }
}

}  // namespace detail

inline std::uint64_t inflow(const Graph& g, const PebbleFlow& f, Vertex v) {
  detail::require_fits(g, f);
  std::uint64_t total = 0;
  for (std::size_t idx : g.in_edge_indices(v)) total += f.flow[idx];
  return total;
}

inline std::uint64_t outflow(const Graph& g, const PebbleFlow& f, Vertex v) {
  detail::require_fits(g, f);
  std::uint64_t total = 0;
  for (std::size_t idx = 0; idx < g.edge_count(); ++idx)
    if (g.edges()[idx].from == v) total += f.flow[idx];
  return total;
}

/// Pebbles that leave v: sum of weight times flow over its out-edges.
inline std::uint64_t weighted_outflow(const Graph& g, const PebbleFlow& f, Vertex v) {
  detail::require_fits(g, f);
  std::uint64_t total = 0;
  for (std::size_t idx = 0; idx < g.edge_count(); ++idx)
    if (g.edges()[idx].from == v) total += f.flow[idx] * g.edges()[idx].weight;
  return total;
}

/// x(v) = c(v) + in(v) - out*(v), for every vertex.
inline std::vector<std::int64_t> excesses(const Graph& g, const PebbleFlow& f) {
  detail::require_fits(g, f);
  std::vector<std::int64_t> x(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) x[v] = f.config[v];
  for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
    const Edge& e = g.edges()[idx];
    const auto units = static_cast<std::int64_t>(f.flow[idx]);
    x[e.to] += units;
    x[e.from] -= units * e.weight;
  }
  return x;
}

inline std::int64_t excess(const Graph& g, const PebbleFlow& f, Vertex v) { return excesses(g, f).at(v); }

inline bool is_feasible(const Graph& g, const PebbleFlow& f) {
  auto x = excesses(g, f);
  return std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v >= 0; });
}

inline bool is_realized(const Graph& g, const PebbleFlow& f) {
  auto x = excesses(g, f);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (static_cast<std::int64_t>(f.config[v]) < x[v]) return false;
  return true;
}

/// Counts the steps along each edge after checking the replay is legal.
inline PebbleFlow flow_from_steps(const Graph& g, const Configuration& c, const StepSequence& steps) {
  replay(g, c, steps);
  PebbleFlow f = zero_flow(g, c);
  for (const Step& s : steps) ++f.flow[*g.edge_index(s.from, s.to)];
  return f;
}

/// One flow step along (u, v): fire the pebbling step and use up one unit
/// of flow on the edge. Leaves every excess unchanged.
inline PebbleFlow flow_step(const Graph& g, const PebbleFlow& f, Vertex u, Vertex v) {
  detail::require_fits(g, f);
  auto idx = g.edge_index(u, v);
  if (!idx) throw illegal_step("no edge " + std::to_string(u) + " -> " + std::to_string(v));
  if (f.flow[*idx] == 0) throw illegal_step("no flow left on edge " + std::to_string(u) + " -> " + std::to_string(v));
  PebbleFlow out{apply_step(g, f.config, u, v), f.flow};
  --out.flow[*idx];
  return out;
}

struct Realization {
  StepSequence steps;
  Configuration final;
};

/// Fires flow steps until every vertex holds at least its excess. Each step
/// comes from the lowest-id vertex whose remaining outflow exceeds its
/// inflow, along its lightest remaining out-edge (lowest id on ties).
inline Realization realize(const Graph& g, const PebbleFlow& f) {
  if (!is_feasible(g, f)) throw std::invalid_argument("flow is not feasible");
  const auto x = excesses(g, f);
  PebbleFlow cur = f;
  Realization out;
  auto realized = [&] {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (static_cast<std::int64_t>(cur.config[v]) < x[v]) return false;
    return true;
  };
  std::vector<std::uint64_t> in(g.vertex_count()), outf(g.vertex_count());
  while (!realized()) {
    std::fill(in.begin(), in.end(), 0);
    std::fill(outf.begin(), outf.end(), 0);
    for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
      in[g.edges()[idx].to] += cur.flow[idx];
      outf[g.edges()[idx].from] += cur.flow[idx];
    }
    Vertex w = 0;
    while (w < g.vertex_count() && in[w] >= outf[w]) ++w;
    if (w == g.vertex_count()) throw std::logic_error("no vertex with surplus outflow");
    std::optional<std::size_t> pick;
    for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
      const Edge& e = g.edges()[idx];
      if (e.from != w || cur.flow[idx] == 0) continue;
      if (!pick || e.weight < g.edges()[*pick].weight) pick = idx;
    }
    const Edge& e = g.edges()[*pick];
    cur = flow_step(g, cur, e.from, e.to);
    out.steps.push_back({e.from, e.to});
  }
  out.final = cur.config;
  return out;
}

/// Net flow between each pair: F*(u, v) = F(u, v) - min(F(u, v), F(v, u)).
inline PebbleFlow unidirectional(const Graph& g, const PebbleFlow& f) {
  detail::require_fits(g, f);
  PebbleFlow out = f;
  for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
    const Edge& e = g.edges()[idx];
    auto back = g.edge_index(e.to, e.from);
    if (back) out.flow[idx] = f.flow[idx] - std::min(f.flow[idx], f.flow[*back]);
  }
  return out;
}

enum class FlowEdgeOrder {
  head_distance,  // edges whose head is closest to t first
  tail_distance,  // edges whose tail is farthest from t first
};

struct FlowSearchOptions {
  FlowEdgeOrder order = FlowEdgeOrder::tail_distance;
  bool lp_pruning = false;
};

namespace detail {

/// Depth-first branch and bound over integer edge flows with x >= 0 and
/// x(t) >= n. Only unidirectional flows are tried, which loses nothing.
class FlowSearch {
  using Potential = __int128;

 public:
  FlowSearch(const Graph& g, const Configuration& c, Vertex t, Count n, const FlowSearchOptions& options)
      : g_(g), c_(c), t_(t), n_(n), options_(options) {
    const auto dist = distances_to(g, t);
    order_.resize(g.edge_count());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    if (options.order == FlowEdgeOrder::head_distance) {
      std::stable_sort(order_.begin(), order_.end(),
                       [&](std::size_t a, std::size_t b) { return dist[g.edges()[a].to] < dist[g.edges()[b].to]; });
    } else {
      std::stable_sort(order_.begin(), order_.end(),
                       [&](std::size_t a, std::size_t b) { return dist[g.edges()[a].from] > dist[g.edges()[b].from]; });
    }
    const std::uint64_t size = c.size();
    budget_ = size >= n ? size - n : 0;
    flow_.assign(g.edge_count(), 0);
    assigned_.assign(g.edge_count(), false);
    balance_.assign(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) balance_[v] = c[v];
    open_in_.assign(g.vertex_count(), 0);
    for (std::size_t idx = 0; idx < g.edge_count(); ++idx) open_in_[g.edges()[idx].to] += cap(idx);
    if (auto p = potential_scale(g, t)) {
      scale_ = std::move(p->scale);
      goal_ = static_cast<Potential>(n) * p->unit;
      for (Vertex v = 0; v < g.vertex_count(); ++v) potential_ += static_cast<Potential>(c[v]) * scale_[v];
    }
  }

  std::optional<std::vector<std::uint64_t>> run() {
    if (c_.size() < n_) return std::nullopt;
    if (search(0, budget_)) return flow_;
    return std::nullopt;
  }

 private:
  std::uint64_t cap(std::size_t idx) const { return c_.size() / (g_.edges()[idx].weight - 1); }

  std::int64_t need(Vertex v) const { return v == t_ ? static_cast<std::int64_t>(n_) : 0; }

  /// Optimistic check: even with every open in-edge at its cap (bounded by
  /// the remaining loss budget) some vertex stays short.
  bool hopeless(std::uint64_t budget) const {
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      std::int64_t best = balance_[v] + static_cast<std::int64_t>(std::min<std::uint64_t>(open_in_[v], budget));
      if (best < need(v)) return true;
    }
    return false;
  }

  bool lp_infeasible_now() const {
    std::vector<std::size_t> open;
    for (std::size_t idx = 0; idx < g_.edge_count(); ++idx)
      if (!assigned_[idx]) open.push_back(idx);
    LinearProgram lp;
    lp.objective.assign(open.size(), 0);
    // out*(v) - in(v) over open edges <= balance(v) - need(v)
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      LinearConstraint con;
      con.coefficients.assign(open.size(), 0);
      for (std::size_t i = 0; i < open.size(); ++i) {
        const Edge& e = g_.edges()[open[i]];
        if (e.from == v) con.coefficients[i] += e.weight;
        if (e.to == v) con.coefficients[i] -= 1;
      }
      con.bound = balance_[v] - need(v);
      lp.constraints.push_back(std::move(con));
    }
    try {
      simplex_max(lp);
    } catch (const lp_infeasible&) {
      return true;
    }
    return false;
  }

  bool search(std::size_t pos, std::uint64_t budget) {
    // Open edges can only lower sum balance(v) * scale(v), and a solution
    // ends with it at least n * unit.
    if (!scale_.empty() && potential_ < goal_) return false;
    if (hopeless(budget)) return false;
    if (pos == order_.size()) {
      for (Vertex v = 0; v < g_.vertex_count(); ++v)
        if (balance_[v] < need(v)) return false;
      return true;
    }
    if (options_.lp_pruning && lp_infeasible_now()) return false;
    const std::size_t idx = order_[pos];
    const Edge& e = g_.edges()[idx];
    const std::uint64_t loss = e.weight - 1;
    open_in_[e.to] -= cap(idx);
    assigned_[idx] = true;
    std::uint64_t hi = 0;
    auto back = g_.edge_index(e.to, e.from);
    bool forced_zero = back && assigned_[*back] && flow_[*back] > 0;
    if (!forced_zero) {
      // What the tail could ever hold bounds how often it fires.
      std::int64_t avail = balance_[e.from] + static_cast<std::int64_t>(std::min<std::uint64_t>(open_in_[e.from], budget));
      avail -= need(e.from);
      hi = avail > 0 ? static_cast<std::uint64_t>(avail) / e.weight : 0;
      hi = std::min({hi, cap(idx), budget / loss});
    }
    Potential per_unit = 0;
    if (!scale_.empty()) {
      per_unit = static_cast<Potential>(scale_[e.to]) - static_cast<Potential>(e.weight) * scale_[e.from];
    }
    bool found = false;
    for (std::uint64_t f = hi + 1; f-- > 0 && !found;) {
      flow_[idx] = f;
      balance_[e.from] -= static_cast<std::int64_t>(f * e.weight);
      balance_[e.to] += static_cast<std::int64_t>(f);
      potential_ += per_unit * static_cast<Potential>(f);
      found = search(pos + 1, budget - f * loss);
      if (!found) {
        balance_[e.from] += static_cast<std::int64_t>(f * e.weight);
        balance_[e.to] -= static_cast<std::int64_t>(f);
        potential_ -= per_unit * static_cast<Potential>(f);
      }
    }
    if (!found) {
      flow_[idx] = 0;
      assigned_[idx] = false;
      open_in_[e.to] += cap(idx);
    }
    return found;
  }

  const Graph& g_;
  const Configuration& c_;
  Vertex t_;
  Count n_;
  FlowSearchOptions options_;
  std::vector<std::size_t> order_;
  std::uint64_t budget_ = 0;
  std::vector<std::uint64_t> flow_;
  std::vector<bool> assigned_;
  std::vector<std::int64_t> balance_;  // c(v) + assigned in - assigned out*
  std::vector<std::uint64_t> open_in_;
  std::vector<std::uint64_t> scale_;
  Potential potential_ = 0;
  Potential goal_ = 0;
};

}  // namespace detail

/// Decides n-fold t-solvability as an integer program over edge flows and
/// returns a feasible flow with x(t) >= n when one exists.
inline std::optional<PebbleFlow> solve_via_flow(const Graph& g, const Configuration& c, Vertex t, Count n,
                                                const FlowSearchOptions& options = {}) {
  if (t >= g.vertex_count()) throw std::invalid_argument("target out of range");
  if (c.vertex_count() != g.vertex_count()) throw std::invalid_argument("configuration does not fit graph");
  if (c[t] >= n) return zero_flow(g, c);
  detail::FlowSearch search(g, c, t, n, options);
  auto flow = search.run();
  if (!flow) return std::nullopt;
  return PebbleFlow{c, std::move(*flow)};
}

}  // namespace pebbling
