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

// The `pebble` command line front end. run() is kept in a header so the
// tests can drive it with string streams.

#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pebbling/pebbling.hpp"

namespace pebbling::cli {

using json = nlohmann::ordered_json;

/// Bad command line: missing or conflicting options. Exit code 2.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return json(v.convert_to<std::int64_t>());
  }
  return json(v.str());
}

inline json to_json(const Configuration& c) { return json(c.counts()); }

inline json to_json(const StepSequence& steps) {
  json out = json::array();
  for (const Step& s : steps) out.push_back({s.from, s.to});
  return out;
}

inline json to_json(const IndexSet& s) { return json(std::vector<std::size_t>(s.begin(), s.end())); }

inline std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

/// Inline JSON when the argument starts with '[' or '{', file contents
/// otherwise.
inline std::string inline_or_file(const std::string& arg) {
  std::string t = trimmed(arg);
  if (!t.empty() && (t.front() == '[' || t.front() == '{')) return t;
  return io::read_file(arg);
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

/// A JSON array of counts, a JSON object from `--json` output (its
/// "witness"), or a configuration text file.
inline Configuration load_configuration(const std::string& arg, const Graph& g) {
  std::string text = trimmed(inline_or_file(arg));
  if (text.empty() || (text.front() != '[' && text.front() != '{')) return io::parse_configuration(text, g.vertex_count());
  json j = parse_json(text);
  if (j.is_object()) {
    if (!j.contains("witness")) throw std::invalid_argument("JSON object has no 'witness' configuration");
    j = j["witness"];
  }
  if (!j.is_array()) throw std::invalid_argument("configuration must be a JSON array of counts");
  if (j.size() != g.vertex_count()) {
    throw std::invalid_argument("configuration has " + std::to_string(j.size()) + " entries, graph has " +
                                std::to_string(g.vertex_count()) + " vertices");
  }
  Configuration c(g.vertex_count());
  for (std::size_t v = 0; v < j.size(); ++v) {
    if (!j[v].is_number_unsigned() || j[v].get<std::uint64_t>() > std::numeric_limits<Count>::max()) {
      throw std::invalid_argument("configuration entry " + std::to_string(v) + " is not a valid pebble count");
    }
    c[v] = j[v].get<Count>();
  }
  return c;
}

/// A JSON array of [u, v] pairs, a JSON object from `--json` output (its
/// "steps"), or a steps text file.
inline StepSequence load_steps(const std::string& arg, const Graph& g) {
  std::string text = trimmed(inline_or_file(arg));
  if (text.empty() || (text.front() != '[' && text.front() != '{')) return io::parse_steps(text, g.vertex_count());
  json j = parse_json(text);
  if (j.is_object()) {
    if (!j.contains("steps")) throw std::invalid_argument("JSON object has no 'steps'");
    j = j["steps"];
  }
  if (!j.is_array()) throw std::invalid_argument("steps must be a JSON array of [from, to] pairs");
  StepSequence steps;
  for (const auto& s : j) {
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_unsigned() || !s[1].is_number_unsigned()) {
      throw std::invalid_argument("each step must be a [from, to] pair");
    }
    Vertex u = s[0].get<Vertex>(), v = s[1].get<Vertex>();
    if (u >= g.vertex_count() || v >= g.vertex_count()) throw std::invalid_argument("step vertex out of range");
    steps.push_back({u, v});
  }
  return steps;
}

inline std::vector<std::int64_t> parse_sequence(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    item = trimmed(item);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw std::invalid_argument("bad sequence entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

/// One command's answer: `result` first, then the optional witness and
/// steps, then any extra fields.
struct Output {
  json result;
  std::optional<json> witness;
  std::optional<json> steps;
  json extra = json::object();
  std::string text_tail;  // text mode only, printed after the result line
};

inline std::string text_of(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

inline void emit(const Output& o, bool as_json, std::ostream& out) {
  if (as_json) {
    json j = json::object();
    j["result"] = o.result;
    if (o.witness) j["witness"] = *o.witness;
    if (o.steps) j["steps"] = *o.steps;
    for (const auto& [k, v] : o.extra.items()) j[k] = v;
    out << j.dump() << '\n';
    return;
  }
  out << text_of(o.result) << '\n';
  out << o.text_tail;
}

struct GraphSource {
  std::string file;
  std::string family;
};

inline Graph load_graph(const GraphSource& src) {
  if (src.file.empty() == src.family.empty()) throw usage_error("give exactly one of --graph or --family");
  if (!src.family.empty()) return family::make_family(src.family);
  return io::parse_graph(io::read_file(src.file), src.file);
}

inline void require_vertex(const Graph& g, Vertex v, const char* what) {
  if (v >= g.vertex_count()) {
    throw std::invalid_argument(std::string(what) + " " + std::to_string(v) + " out of range (graph has " +
                                std::to_string(g.vertex_count()) + " vertices)");
  }
}

inline std::string config_text(const Configuration& c) { return io::format_configuration(c); }

}  // namespace detail


/// Every option of every subcommand; each subcommand reads its own subset.
struct Params {
  bool as_json = false;
  detail::GraphSource src;
  std::optional<Vertex> target;
  Count fold = 1;
  unsigned jobs = 1;
  bool progress = false;
  std::string config;
  std::string replay;
  std::string flow_file;
  bool head_order = false;
  bool lp_prune = false;
  std::uint64_t size = 0;
  std::optional<std::uint64_t> pi;
  std::string variant = "support";
  std::uint32_t k = 2;
  std::uint64_t p = 0;
  std::uint64_t m_max = 0;
  std::uint64_t budget = 50'000'000;
  Vertex root = 0;
  std::vector<std::string> weight_files;
  bool cycle_weights = false;
  std::uint64_t vertices = 0;
  std::uint64_t pebbles = 0;
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::string seq;
  std::string kind = "gcd";
  bool two_pp = false;
  std::string out_path;
};

namespace detail {

using Action = Output (*)(const Params&);

inline SearchOptions search_options(const Params& p) {
  SearchOptions o;
  o.jobs = p.jobs;
  o.progress = p.progress;
  return o;
}

inline Vertex need_target(const Params& p, const Graph& g) {
  if (!p.target) throw usage_error("--target is required");
  require_vertex(g, *p.target, "target");
  return *p.target;
}

inline std::vector<WeightFunction> load_weights(const Params& p, const Graph& g, Vertex t) {
  std::vector<WeightFunction> ws;
  for (const auto& f : p.weight_files) ws.push_back(io::parse_weight_function(io::read_file(f), g.vertex_count()));
  if (p.cycle_weights) {
    auto [w1, w2] = cycle_weight_functions(g.vertex_count(), t);
    ws.push_back(w1);
    ws.push_back(w2);
  }
  if (ws.empty()) throw usage_error("give --weights FILE or --cycle-weights");
  return ws;
}

inline json rational_json(const Rational& r) { return json(to_string(r)); }

inline Output cmd_pi(const Params& p) {
  Graph g = load_graph(p.src);
  Vertex t = need_target(p, g);
  auto r = pebbling_number(g, t, p.fold, search_options(p));
  Output o{r.value};
  o.witness = to_json(r.witness_unsolvable);
  o.text_tail = "# unsolvable witness of size " + std::to_string(r.value - 1) + "\n" + config_text(r.witness_unsolvable);
  return o;
}

inline Output cmd_pi_all(const Params& p) {
  Graph g = load_graph(p.src);
  auto r = pebbling_number_graph(g, search_options(p));
  Output o{r.value};
  o.witness = to_json(r.witness_unsolvable);
  o.extra["target"] = r.target;
  o.text_tail = "# attained at target " + std::to_string(r.target) + "\n" + config_text(r.witness_unsolvable);
  return o;
}

inline Output cmd_solve(const Params& p) {
  Graph g = load_graph(p.src);
  Vertex t = need_target(p, g);
  Configuration c = load_configuration(p.config, g);
  if (!p.replay.empty()) {
    Configuration final = replay(g, c, load_steps(p.replay, g));
    Output o{final[t] >= p.fold ? "solved" : "not-solved"};
    o.extra["final"] = to_json(final);
    o.text_tail = "# final configuration\n" + config_text(final);
    return o;
  }
  auto r = is_solvable(g, c, t, p.fold);
  Output o{r.solvable ? "solvable" : "unsolvable"};
  if (r.solvable) {
    o.steps = to_json(*r.witness);
    o.text_tail = io::format_steps(*r.witness);
  }
  return o;
}

inline std::string excess_table(const Graph& g, const PebbleFlow& f, json& rows) {
  std::ostringstream t;
  auto x = excesses(g, f);
  t << "# vertex pebbles inflow outflow weighted-outflow excess\n";
  rows = json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    t << "# " << v << ' ' << f.config[v] << ' ' << inflow(g, f, v) << ' ' << outflow(g, f, v) << ' '
      << weighted_outflow(g, f, v) << ' ' << x[v] << '\n';
    rows.push_back(x[v]);
  }
  return t.str();
}

inline Output cmd_flow(const Params& p) {
  Graph g = load_graph(p.src);
  if (!p.flow_file.empty()) {
    PebbleFlow f = io::parse_flow(io::read_file(p.flow_file), g);
    json rows;
    std::string table = excess_table(g, f, rows);
    const bool feasible = is_feasible(g, f);
    Output o{feasible ? "feasible" : "infeasible"};
    o.extra["excess"] = rows;
    o.extra["realized"] = is_realized(g, f);
    o.text_tail = table;
    if (feasible) {
      auto r = realize(g, f);
      o.steps = to_json(r.steps);
      o.text_tail += io::format_steps(r.steps);
    }
    return o;
  }
  if (p.config.empty()) throw usage_error("flow needs --config or --flow");
  Vertex t = need_target(p, g);
  Configuration c = load_configuration(p.config, g);
  FlowSearchOptions fo;
  fo.order = p.head_order ? FlowEdgeOrder::head_distance : FlowEdgeOrder::tail_distance;
  fo.lp_pruning = p.lp_prune;
  auto f = solve_via_flow(g, c, t, p.fold, fo);
  Output o{f ? "solvable" : "unsolvable"};
  if (f) {
    json rows;
    std::string table = excess_table(g, *f, rows);
    auto r = realize(g, *f);
    o.steps = to_json(r.steps);
    json edges = json::array();
    for (std::size_t i = 0; i < g.edge_count(); ++i)
      if (f->flow[i] > 0) edges.push_back({g.edges()[i].from, g.edges()[i].to, f->flow[i]});
    o.extra["flow"] = edges;
    o.extra["excess"] = rows;
    o.text_tail = io::format_flow(g, *f) + table + io::format_steps(r.steps);
  }
  return o;
}

inline Output cmd_witness(const Params& p) {
  Graph g = load_graph(p.src);
  Vertex t = need_target(p, g);
  auto w = unsolvable_witness(g, t, p.size, p.fold);
  Output o{w ? "unsolvable" : "none"};
  if (w) {
    o.witness = to_json(*w);
    o.text_tail = config_text(*w);
  }
  return o;
}

inline Output cmd_2pp(const Params& p) {
  Graph g = load_graph(p.src);
  TwoPebblingVariant variant;
  if (p.variant == "support") {
    variant = TwoPebblingVariant::support;
  } else if (p.variant == "odd") {
    variant = TwoPebblingVariant::odd;
  } else {
    throw usage_error("--variant must be support or odd");
  }
  std::uint64_t pi = p.pi ? *p.pi : pebbling_number_graph(g, search_options(p)).value;
  auto r = has_2pp(g, pi, variant);
  Output o{r.holds};
  o.extra["pi"] = pi;
  o.text_tail = "# pi " + std::to_string(pi) + "\n";
  if (r.counterexample) {
    const auto& [c, t] = *r.counterexample;
    o.witness = to_json(c);
    o.extra["target"] = t;
    o.text_tail += "# not 2-fold solvable to vertex " + std::to_string(t) + "\n" + config_text(c);
  }
  return o;
}

inline Output cmd_tau(const Params& p) {
  Graph g = load_graph(p.src);
  Vertex t = need_target(p, g);
  auto r = verify_tau_detailed(g, t, p.fold, p.k, p.p, p.m_max, p.budget);
  Output o{r.holds};
  o.extra["checked"] = r.checked;
  o.text_tail = "# configurations checked " + std::to_string(r.checked) + "\n";
  if (r.counterexample) {
    const auto& [c, m] = *r.counterexample;
    o.witness = to_json(c);
    o.extra["m"] = m;
    o.text_tail += "# counterexample for m = " + std::to_string(m) + "\n" + config_text(c);
  }
  return o;
}

inline Output cmd_optimal_pi(const Params& p) {
  Graph g = load_graph(p.src);
  auto r = optimal_pebbling_number(g, search_options(p));
  Output o{r.value};
  o.witness = to_json(r.witness);
  o.text_tail = config_text(r.witness);
  return o;
}

inline Output cmd_tree_pi(const Params& p) {
  Graph g = load_graph(p.src);
  require_vertex(g, p.root, "root");
  Output o{tree_pebbling_number(g, p.root, p.fold)};
  const Weight k = g.edge_count() ? g.edges()[0].weight : 2;
  if (g.uniform_weight(k)) {
    BigInt formula = pi_tree(g, p.root, k, p.fold);
    o.extra["formula"] = to_json(formula);
    json paths = json::array();
    for (const auto& path : max_path_partition(g, p.root).paths) paths.push_back(path);
    o.extra["paths"] = paths;
    o.text_tail = "# path partition formula " + formula.str() + "\n";
  }
  return o;
}

inline Output cmd_wf_validate(const Params& p) {
  Graph g = load_graph(p.src);
  if (p.weight_files.size() != 1) throw usage_error("wf-validate takes exactly one --weights file");
  auto w = io::parse_weight_function(io::read_file(p.weight_files[0]), g.vertex_count());
  const bool valid = validate_weight_function(g, w);
  Output o{valid ? "valid" : "invalid"};
  o.extra["size"] = rational_json(weight_size(w));
  o.text_tail = "# |w| = " + to_string(weight_size(w)) + "\n";
  return o;
}

inline Output cmd_wf_bound(const Params& p) {
  Graph g = load_graph(p.src);
  Vertex t = p.target.value_or(0);
  require_vertex(g, t, "target");
  auto ws = load_weights(p, g, t);
  Output o{to_json(covering_bound(g, ws))};
  o.extra["functions"] = ws.size();
  return o;
}

inline Output cmd_lp_bound(const Params& p) {
  Graph g = load_graph(p.src);
  Vertex t = p.target.value_or(0);
  require_vertex(g, t, "target");
  auto ws = load_weights(p, g, t);
  auto r = lp_bound(g, t, ws);
  Output o{to_json(r.bound)};
  o.extra["optimum"] = rational_json(r.solution.optimum);
  json primal = json::array(), dual = json::array();
  for (const auto& x : r.solution.primal) primal.push_back(to_string(x));
  for (const auto& y : r.solution.dual) dual.push_back(to_string(y));
  o.extra["primal"] = primal;
  o.extra["dual"] = dual;
  o.text_tail = "# LP optimum " + to_string(r.solution.optimum) + "\n";
  return o;
}

inline Output cmd_count_configs(const Params& p) {
  if (p.vertices < 1) throw usage_error("--vertices must be >= 1");
  return Output{to_json(config_count(p.vertices, p.pebbles))};
}

inline Output index_output(const IndexSet& s, const std::vector<std::int64_t>& seq, std::int64_t n) {
  std::int64_t sum = 0, gcd_sum = 0;
  for (auto i : s) {
    sum += seq[i - 1];
    gcd_sum += std::gcd(n, seq[i - 1]);
  }
  Output o{to_json(s)};
  o.extra["sum"] = sum;
  o.extra["gcd_sum"] = gcd_sum;
  o.text_tail = "# sum " + std::to_string(sum) + ", sum of gcds with " + std::to_string(n) + " " +
                std::to_string(gcd_sum) + "\n";
  return o;
}

inline Output cmd_zerosum(const Params& p) {
  auto seq = parse_sequence(p.seq);
  IndexSet s;
  if (p.kind == "divisor") {
    s = divisor_zero_sum(p.n, seq);
  } else if (p.kind == "gcd") {
    s = gcd_zero_sum(p.n, seq);
  } else if (p.kind == "mod") {
    s = zero_sum_mod(seq, p.n);
  } else {
    throw usage_error("--kind must be divisor, gcd or mod");
  }
  return index_output(s, seq, p.n);
}

inline Output cmd_erdos_lemke(const Params& p) {
  auto seq = parse_sequence(p.seq);
  return index_output(erdos_lemke(p.n, p.d, seq), seq, p.d);
}

inline Output cmd_emit_smv(const Params& p) {
  Graph g = load_graph(p.src);
  SmvModel m;
  if (p.two_pp) {
    if (!p.pi) throw usage_error("--2pp needs --pi");
    m = emit_2pp_model(g, *p.pi);
  } else {
    if (p.pebbles < 1) throw usage_error("emit-smv needs --pebbles");
    m = emit_pebbling_model(g, p.pebbles);
  }
  if (p.out_path.empty()) {
    Output o{m.text};
    return o;
  }
  std::ofstream file(p.out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot write '" + p.out_path + "'");
  file << m.text;
  return Output{p.out_path};
}

}  // namespace detail

/// Runs one command line (args excludes the program name). Exit status: 0
/// success, 1 domain error with a one-line diagnostic, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph pebbling toolkit", "pebble"};
  app.require_subcommand(1, 1);
  Params p;
  detail::Action action = nullptr;

  auto sub = [&](const char* name, const char* about, detail::Action a) {
    CLI::App* s = app.add_subcommand(name, about);
    s->callback([&action, a] { action = a; });
    s->add_flag("--json", p.as_json, "Emit one JSON object");
    return s;
  };
  auto graph = [&](CLI::App* s) {
    s->add_option("--graph", p.src.file, "Graph text file");
    s->add_option("--family", p.src.family, "Family spec, e.g. cycle:7:2 or 'cycle:3 x path:3'");
  };
  auto target = [&](CLI::App* s) { s->add_option("--target", p.target, "Target vertex"); };
  auto fold = [&](CLI::App* s) {
    s->add_option("--fold", p.fold, "Pebbles required on the target")->check(CLI::PositiveNumber);
  };
  auto search = [&](CLI::App* s) {
    s->add_option("--jobs", p.jobs, "Worker threads")->check(CLI::PositiveNumber);
    s->add_flag("--progress", p.progress, "Progress lines on stderr");
  };
  auto weights = [&](CLI::App* s) {
    s->add_option("--weights", p.weight_files, "Weight function text file (repeatable)");
    s->add_flag("--cycle-weights", p.cycle_weights, "Use the generated mirror pair on a cycle");
  };

  {
    auto* s = sub("pi", "Pebbling number pi_n(G, t) by exhaustive search", detail::cmd_pi);
    graph(s), target(s), fold(s), search(s);
  }
  {
    auto* s = sub("pi-all", "Pebbling number pi(G): the maximum over all targets", detail::cmd_pi_all);
    graph(s), search(s);
  }
  {
    auto* s = sub("solve", "Decide n-fold t-solvability, or replay steps", detail::cmd_solve);
    graph(s), target(s), fold(s);
    s->add_option("--config", p.config, "Configuration: JSON array, JSON output, or text file")->required();
    s->add_option("--replay", p.replay, "Steps: JSON array, JSON output, or text file");
  }
  {
    auto* s = sub("flow", "Solve through pebbling flows, or inspect a flow file", detail::cmd_flow);
    graph(s), target(s), fold(s);
    auto* c = s->add_option("--config", p.config, "Configuration: JSON array, JSON output, or text file");
    auto* f = s->add_option("--flow", p.flow_file, "Flow text file to inspect");
    c->excludes(f);
    s->add_flag("--head-order", p.head_order, "Branch on edges nearest the target first");
    s->add_flag("--lp-prune", p.lp_prune, "Prune with the exact LP relaxation");
  }
  {
    auto* s = sub("witness", "First unsolvable configuration of a given size", detail::cmd_witness);
    graph(s), target(s), fold(s);
    s->add_option("--size", p.size, "Configuration size")->required();
  }
  {
    auto* s = sub("2pp", "Check the 2-pebbling property", detail::cmd_2pp);
    graph(s), search(s);
    s->add_option("--pi", p.pi, "Known pebbling number (computed when omitted)");
    s->add_option("--variant", p.variant, "support or odd");
  }
  {
    auto* s = sub("tau", "Bounded check of the block-extraction threshold tau_{n,k} <= p", detail::cmd_tau);
    graph(s), target(s), fold(s);
    s->add_option("--k", p.k, "Block size")->check(CLI::PositiveNumber);
    s->add_option("--p", p.p, "Claimed threshold")->required();
    s->add_option("--m-max", p.m_max, "Largest m checked")->required();
    s->add_option("--budget", p.budget, "Configuration budget");
  }
  {
    auto* s = sub("optimal-pi", "Optimal pebbling number", detail::cmd_optimal_pi);
    graph(s), search(s);
  }
  {
    auto* s = sub("tree-pi", "Pebbling number of a tree, exact and by path partition", detail::cmd_tree_pi);
    graph(s), fold(s);
    s->add_option("--root", p.root, "Root vertex")->required();
  }
  {
    auto* s = sub("wf-validate", "Check a weight function", detail::cmd_wf_validate);
    graph(s);
    s->add_option("--weights", p.weight_files, "Weight function text file")->required();
  }
  {
    auto* s = sub("wf-bound", "Covering bound from weight functions", detail::cmd_wf_bound);
    graph(s), target(s), weights(s);
  }
  {
    auto* s = sub("lp-bound", "Linear-programming bound from weight functions", detail::cmd_lp_bound);
    graph(s), target(s), weights(s);
  }
  {
    auto* s = sub("count-configs", "Number of configurations of p pebbles on v vertices", detail::cmd_count_configs);
    s->add_option("--vertices", p.vertices, "Vertex count")->required();
    s->add_option("--pebbles", p.pebbles, "Pebble count")->required();
  }
  {
    auto* s = sub("zerosum", "Zero-sum subsequence through divisor-lattice pebbling", detail::cmd_zerosum);
    s->add_option("--n", p.n, "Modulus")->required();
    s->add_option("--seq", p.seq, "Comma-separated integers")->required();
    s->add_option("--kind", p.kind, "divisor, gcd (default) or mod");
  }
  {
    auto* s = sub("erdos-lemke", "Subsequence of divisors of n with sum a multiple of d, at most n",
                  detail::cmd_erdos_lemke);
    s->add_option("--n", p.n, "n")->required();
    s->add_option("--d", p.d, "d, a divisor of n")->required();
    s->add_option("--seq", p.seq, "Comma-separated divisors of n")->required();
  }
  {
    auto* s = sub("emit-smv", "NuSMV model of pebbling or of the 2-pebbling property", detail::cmd_emit_smv);
    graph(s);
    s->add_option("--pebbles", p.pebbles, "Total pebbles in the initial states");
    s->add_flag("--2pp", p.two_pp, "Emit the 2-pebbling property model");
    s->add_option("--pi", p.pi, "Pebbling number, for --2pp");
    s->add_option("--out", p.out_path, "Write the model here (.smv) instead of stdout");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }
  try {
    detail::emit(action(p), p.as_json, out);
    return 0;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace pebbling::cli
