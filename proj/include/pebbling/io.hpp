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

// Line-based text formats. Blank lines and anything after '#' are ignored.
//
//   graph:            vertices <n>, then edge <u> <v> <k>
//   configuration:    pebbles <v> <count>   (vertices not listed hold 0)
//   flow:             flow <u> <v> <count>, plus a configuration block
//   steps:            step <u> <v>, in firing order
//   weight function:  target <v>, then w <v> <p>/<q>  (or w <v> <p>)

#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/flow.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/weight_function.hpp"

namespace pebbling::io {

class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.words.push_back(w);
    if (!line.words.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] inline void fail(const Line& line, const std::string& message) {
  throw parse_error("line " + std::to_string(line.number) + ": " + message);
}

inline std::uint64_t number(const Line& line, std::size_t i, std::uint64_t max = std::numeric_limits<std::uint64_t>::max()) {
  const std::string& w = line.words.at(i);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
  if (ec != std::errc() || ptr != w.data() + w.size()) fail(line, "expected a non-negative integer, got '" + w + "'");
  if (value > max) fail(line, "value " + w + " is too large");
  return value;
}

inline void expect_words(const Line& line, std::size_t count) {
  if (line.words.size() != count) {
    fail(line, "'" + line.words[0] + "' takes " + std::to_string(count - 1) + " arguments");
  }
}

inline Vertex vertex(const Line& line, std::size_t i, std::size_t vertex_count) {
  auto v = number(line, i);
  if (v >= vertex_count) fail(line, "vertex " + std::to_string(v) + " out of range");
  return static_cast<Vertex>(v);
}

/// Reads the pebbles lines of an already tokenized text.
inline Configuration configuration_from(const std::vector<Line>& lines, std::size_t vertex_count, bool allow_other) {
  Configuration c(vertex_count);
  std::vector<bool> seen(vertex_count, false);
  for (const Line& line : lines) {
    if (line.words[0] != "pebbles") {
      if (allow_other) continue;
      fail(line, "unknown keyword '" + line.words[0] + "'");
    }
    expect_words(line, 3);
    Vertex v = vertex(line, 1, vertex_count);
    if (seen[v]) fail(line, "vertex " + std::to_string(v) + " listed twice");
    seen[v] = true;
    c[v] = static_cast<Count>(number(line, 2, std::numeric_limits<Count>::max()));
  }
  return c;
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline Graph parse_graph(std::string_view text, std::string name = {}) {
  auto lines = detail::tokenize(text);
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  for (const auto& line : lines) {
    if (line.words[0] == "vertices") {
      detail::expect_words(line, 2);
      if (n) detail::fail(line, "vertex count given twice");
      n = static_cast<std::size_t>(detail::number(line, 1));
      if (*n == 0) detail::fail(line, "a graph needs at least one vertex");
    } else if (line.words[0] == "edge") {
      detail::expect_words(line, 4);
      if (!n) detail::fail(line, "edge before vertex count");
      Vertex u = detail::vertex(line, 1, *n);
      Vertex v = detail::vertex(line, 2, *n);
      auto k = detail::number(line, 3, std::numeric_limits<Weight>::max());
      if (k < 2) detail::fail(line, "edge weight must be at least 2");
      if (u == v) detail::fail(line, "self-loop at vertex " + std::to_string(u));
      edges.push_back({u, v, static_cast<Weight>(k)});
    } else {
      detail::fail(line, "unknown keyword '" + line.words[0] + "'");
    }
  }
  if (!n) throw parse_error("missing 'vertices' line");
  return Graph(*n, std::move(edges), std::move(name));
}

inline std::string format_graph(const Graph& g) {
  std::ostringstream out;
  if (!g.name().empty()) out << "# " << g.name() << '\n';
  out << "vertices " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << "edge " << e.from << ' ' << e.to << ' ' << e.weight << '\n';
  return out.str();
}

inline Configuration parse_configuration(std::string_view text, std::size_t vertex_count) {
  return detail::configuration_from(detail::tokenize(text), vertex_count, false);
}

inline std::string format_configuration(const Configuration& c) {
  std::ostringstream out;
  for (std::size_t v = 0; v < c.vertex_count(); ++v)
    if (c[v] > 0) out << "pebbles " << v << ' ' << c[v] << '\n';
  return out.str();
}

inline StepSequence parse_steps(std::string_view text, std::size_t vertex_count) {
  StepSequence steps;
  for (const auto& line : detail::tokenize(text)) {
    if (line.words[0] != "step") detail::fail(line, "unknown keyword '" + line.words[0] + "'");
    detail::expect_words(line, 3);
    steps.push_back({detail::vertex(line, 1, vertex_count), detail::vertex(line, 2, vertex_count)});
  }
  return steps;
}

inline std::string format_steps(const StepSequence& steps) {
  std::ostringstream out;
  for (const Step& s : steps) out << "step " << s.from << ' ' << s.to << '\n';
  return out.str();
}

inline PebbleFlow parse_flow(std::string_view text, const Graph& g) {
  auto lines = detail::tokenize(text);
  PebbleFlow f = zero_flow(g, detail::configuration_from(lines, g.vertex_count(), true));
  for (const auto& line : lines) {
    if (line.words[0] == "pebbles") continue;
    if (line.words[0] != "flow") detail::fail(line, "unknown keyword '" + line.words[0] + "'");
    detail::expect_words(line, 4);
    Vertex u = detail::vertex(line, 1, g.vertex_count());
    Vertex v = detail::vertex(line, 2, g.vertex_count());
    auto idx = g.edge_index(u, v);
    if (!idx) detail::fail(line, "no edge " + std::to_string(u) + " -> " + std::to_string(v));
    f.flow[*idx] += detail::number(line, 3);
  }
  return f;
}

inline std::string format_flow(const Graph& g, const PebbleFlow& f) {
  std::ostringstream out;
  for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
    if (f.flow[idx] == 0) continue;
    const Edge& e = g.edges()[idx];
    out << "flow " << e.from << ' ' << e.to << ' ' << f.flow[idx] << '\n';
  }
  out << format_configuration(f.config);
  return out.str();
}

inline WeightFunction parse_weight_function(std::string_view text, std::size_t vertex_count) {
  auto lines = detail::tokenize(text);
  WeightFunction w{0, std::vector<Rational>(vertex_count, 0)};
  bool have_target = false;
  for (const auto& line : lines) {
    if (line.words[0] == "target") {
      detail::expect_words(line, 2);
      if (have_target) detail::fail(line, "target given twice");
      w.target = detail::vertex(line, 1, vertex_count);
      have_target = true;
    } else if (line.words[0] == "w") {
      detail::expect_words(line, 3);
      Vertex v = detail::vertex(line, 1, vertex_count);
      const std::string& value = line.words[2];
      auto slash = value.find('/');
      std::string num = value.substr(0, slash);
      std::string den = slash == std::string::npos ? "1" : value.substr(slash + 1);
      auto digits = [](const std::string& s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
      };
      if (!digits(num) || !digits(den)) detail::fail(line, "expected a weight p or p/q, got '" + value + "'");
      BigInt p(num), q(den);
      if (q == 0) detail::fail(line, "zero denominator");
      w.weights[v] = Rational(p, q);
    } else {
      detail::fail(line, "unknown keyword '" + line.words[0] + "'");
    }
  }
  if (!have_target) throw parse_error("missing 'target' line");
  return w;
}

inline std::string format_weight_function(const WeightFunction& w) {
  std::ostringstream out;
  out << "target " << w.target << '\n';
  for (std::size_t v = 0; v < w.weights.size(); ++v)
    if (w.weights[v] != 0) out << "w " << v << ' ' << to_string(w.weights[v]) << '\n';
  return out.str();
}

}  // namespace pebbling::io
