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

#include <cstdint>
#include <sstream>
#include <string>

#include "pebbling/graph.hpp"

namespace pebbling {

/// Model text for the NuSMV symbolic model checker. Vertex v is c[v + 1].
struct SmvModel {
  std::string text;
};

namespace detail {

inline std::string smv_var(Vertex v) { return "c[" + std::to_string(v + 1) + "]"; }

/// One disjunct per edge in (from, to) order, then the stutter transition.
inline void write_smv_trans(std::ostringstream& out, const Graph& g) {
  const std::size_t n = g.vertex_count();
  out << "TRANS\n";
  for (const Edge& e : g.edges()) {
    out << "( " << smv_var(e.from) << ">" << e.weight - 1;
    for (Vertex v = 0; v < n; ++v) {
      out << " & next(" << smv_var(v) << ")=" << smv_var(v);
      if (v == e.from) out << "-" << e.weight;
      if (v == e.to) out << "+1";
    }
    out << " ) |\n";
  }
  out << "  (";
  for (Vertex v = 0; v < n; ++v) out << (v == 0 ? " " : " & ") << "next(" << smv_var(v) << ")=" << smv_var(v);
  out << " )\n";
}

inline std::string smv_sum(const Graph& g) {
  std::string s;
  for (Vertex v = 0; v < g.vertex_count(); ++v) s += (v == 0 ? "" : " + ") + smv_var(v);
  return s;
}

}  // namespace detail

/// Every configuration of `total` pebbles as initial state; one
/// reachability spec per vertex asking for a single pebble there.
inline SmvModel emit_pebbling_model(const Graph& g, std::uint64_t total) {
  std::ostringstream out;
  out << "MODULE main\n";
  out << "DEFINE n := " << total << ";\n";
  out << "VAR c : array 1.." << g.vertex_count() << " of 0..n;\n";
  out << "INIT " << detail::smv_sum(g) << " = n\n\n";
  detail::write_smv_trans(out, g);
  out << "\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "SPEC EF " << detail::smv_var(v) << " > 0\n";
  return {out.str()};
}

/// Initial states are the configurations the 2-pebbling property covers at
/// the threshold size 2 pi + 1 - q, q the number of occupied vertices; one
/// spec per vertex asking for two pebbles there.
inline SmvModel emit_2pp_model(const Graph& g, std::uint64_t pi) {
  std::ostringstream out;
  out << "MODULE main\n";
  out << "DEFINE n := " << g.vertex_count() << "; p := " << pi << ";\n";
  out << "VAR c : array 1..n of 0..2*p;\n\n";
  out << "INIT\n";
  out << "  " << detail::smv_sum(g) << " = 2*p + 1 -\n";
  out << "  count(";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << (v == 0 ? "" : ", ") << detail::smv_var(v) << ">0";
  out << ")\n\n";
  detail::write_smv_trans(out, g);
  out << "\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "SPEC EF " << detail::smv_var(v) << " > 1\n";
  return {out.str()};
}

}  // namespace pebbling
