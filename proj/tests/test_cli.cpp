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

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::StartsWith;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run pebble(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = pebbling::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  const char* dir = std::getenv("PEBBLE_DATA_DIR");
  REQUIRE(dir != nullptr);
  return std::string(dir) + "/" + name;
}

std::string line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("documented command examples", "[cli]") {
  auto pi = pebble({"pi", "--family", "cycle:7:2", "--target", "0"});
  CHECK(pi.code == 0);
  CHECK(line(pi.out) == "11");

  auto count = pebble({"count-configs", "--vertices", "3", "--pebbles", "4"});
  CHECK(count.code == 0);
  CHECK(count.out == "15\n");

  auto el = pebble({"erdos-lemke", "--n", "12", "--d", "6", "--seq", "4,4,4,4,4,4", "--json"});
  REQUIRE(el.code == 0);
  json j = json::parse(el.out);
  REQUIRE(j["result"].size() == 3);
  std::int64_t sum = 0;
  for (auto i : j["result"]) {
    REQUIRE(i.get<int>() >= 1);
    REQUIRE(i.get<int>() <= 6);
    sum += 4;
  }
  CHECK(sum % 6 == 0);
  CHECK(sum <= 12);
  CHECK(j["sum"] == sum);
}

TEST_CASE("golden JSON output", "[cli]") {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
      {{"pi", "--family", "cycle:7:2", "--target", "0", "--json"}, R"({"result":11,"witness":[0,0,0,5,5,0,0]})"},
      {{"count-configs", "--vertices", "3", "--pebbles", "4", "--json"}, R"({"result":15})"},
      {{"solve", "--family", "path:3:2", "--target", "0", "--config", "[0,0,4]", "--json"},
       R"({"result":"solvable","steps":[[2,1],[2,1],[1,0]]})"},
      {{"witness", "--family", "cycle:5:2", "--target", "0", "--size", "4", "--json"},
       R"({"result":"unsolvable","witness":[0,0,1,3,0]})"},
      {{"zerosum", "--n", "3", "--seq", "1,1,1", "--kind", "mod", "--json"}, R"({"result":[1,2,3],"sum":3,"gcd_sum":3})"},
      {{"tree-pi", "--family", "star:3:2", "--root", "1", "--json"}, R"({"result":5,"formula":5,"paths":[[2,0],[3]]})"},
      {{"2pp", "--family", "lemke", "--pi", "8", "--json"},
       R"({"result":false,"witness":[0,0,0,1,1,1,1,8],"pi":8,"target":0})"},
      {{"optimal-pi", "--family", "path:3:2", "--json"}, R"({"result":2,"witness":[0,2,0]})"},
  };
  for (const auto& [args, expected] : cases) {
    INFO(args[0]);
    auto r = pebble(args);
    CHECK(r.code == 0);
    CHECK(r.out == expected + "\n");
    CHECK(pebble(args).out == r.out);
  }
}

TEST_CASE("graph files and family specs agree", "[cli]") {
  auto a = pebble({"pi", "--graph", data("cycle7.graph"), "--target", "0"});
  auto b = pebble({"pi", "--family", "cycle:7:2", "--target", "0"});
  CHECK(a.code == 0);
  CHECK(line(a.out) == line(b.out));
  auto lemke = pebble({"pi-all", "--graph", data("lemke.graph"), "--json", "--jobs", "2"});
  CHECK(json::parse(lemke.out)["result"] == 8);
}

TEST_CASE("text inputs from the data directory", "[cli]") {
  auto s = pebble({"solve", "--graph", data("cycle7.graph"), "--target", "0", "--config", data("c7.config")});
  CHECK(s.code == 0);
  CHECK(line(s.out) == "unsolvable");

  auto w = pebble({"wf-validate", "--graph", data("c4.graph"), "--weights", data("c4.weights")});
  CHECK(w.code == 0);
  CHECK(line(w.out) == "valid");

  auto f = pebble({"flow", "--graph", data("triangle.graph"), "--flow", data("triangle.flow"), "--json"});
  REQUIRE(f.code == 0);
  json j = json::parse(f.out);
  CHECK(j["result"] == "feasible");
  CHECK(j["excess"] == json::array({0, 0, 0}));
  CHECK(j["steps"] == json::array());

  auto r = pebble({"solve", "--family", "path:3:2", "--target", "0", "--config", "[0,0,4]", "--replay", data("p3.steps"),
                   "--json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["result"] == "solved");
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(pebble({}).code == 2);
  CHECK(pebble({"frobnicate"}).code == 2);
  CHECK(pebble({"pi", "--target", "0"}).code == 2);
  CHECK(pebble({"pi", "--family", "cycle:3:2", "--graph", data("c4.graph"), "--target", "0"}).code == 2);
  CHECK(pebble({"count-configs", "--vertices", "3"}).code == 2);
  CHECK(pebble({"pi", "--help"}).code == 0);

  auto bad_family = pebble({"pi", "--family", "moebius:4", "--target", "0"});
  CHECK(bad_family.code == 1);
  CHECK_THAT(bad_family.err, StartsWith("error: "));
  CHECK(std::count(bad_family.err.begin(), bad_family.err.end(), '\n') == 1);
  CHECK(bad_family.out.empty());

  CHECK(pebble({"pi", "--graph", "/nonexistent.graph", "--target", "0"}).code == 1);
  CHECK(pebble({"pi", "--family", "cycle:3:2", "--target", "9"}).code == 1);
  CHECK(pebble({"erdos-lemke", "--n", "12", "--d", "5", "--seq", "1,1,1,1,1"}).code == 1);
  CHECK(pebble({"zerosum", "--n", "3", "--seq", "1,x,1"}).code != 0);
  CHECK(pebble({"solve", "--family", "path:3:2", "--target", "0", "--config", "[0,0]"}).code == 1);
  CHECK(pebble({"solve", "--family", "path:3:2", "--target", "0", "--config", "[4,0,0]", "--replay", "[[0,2]]"}).code ==
        1);
}

TEST_CASE("witnesses and steps replay through solve", "[cli]") {
  const std::vector<std::string> families = {"cycle:5:2", "path:4:3", "cycle:3:2 x path:2:2", "lemke"};
  for (const auto& fam : families) {
    INFO(fam);
    auto w = pebble({"witness", "--family", fam, "--target", "0", "--size", "3", "--json"});
    REQUIRE(w.code == 0);
    if (json::parse(w.out)["result"] == "unsolvable") {
      auto check = pebble({"solve", "--family", fam, "--target", "0", "--config", w.out, "--json"});
      CHECK(json::parse(check.out)["result"] == "unsolvable");
    }
    auto pi = pebble({"pi", "--family", fam, "--target", "0", "--json"});
    REQUIRE(pi.code == 0);
    json pj = json::parse(pi.out);
    std::vector<int> counts = pj["witness"].get<std::vector<int>>();
    counts.back() += 1;
    counts[counts.size() / 2] += 1;
    const std::string solvable = json(counts).dump();
    auto s = pebble({"solve", "--family", fam, "--target", "0", "--config", solvable, "--json"});
    REQUIRE(s.code == 0);
    json sj = json::parse(s.out);
    if (sj["result"] != "solvable") continue;
    auto replay = pebble({"solve", "--family", fam, "--target", "0", "--config", solvable, "--replay", s.out, "--json"});
    REQUIRE(replay.code == 0);
    CHECK(json::parse(replay.out)["result"] == "solved");
  }
}

TEST_CASE("flow output replays through solve", "[cli]") {
  auto f = pebble({"flow", "--family", "cycle:5:2", "--target", "0", "--config", "[0,0,4,4,0]", "--json"});
  REQUIRE(f.code == 0);
  json j = json::parse(f.out);
  REQUIRE(j["result"] == "solvable");
  auto r = pebble({"solve", "--family", "cycle:5:2", "--target", "0", "--config", "[0,0,4,4,0]", "--replay", f.out,
                   "--json"});
  CHECK(json::parse(r.out)["result"] == "solved");
}

TEST_CASE("SMV emission to a file", "[cli]") {
  auto path = std::filesystem::temp_directory_path() / "pebble_cli_test.smv";
  auto r = pebble({"emit-smv", "--family", "path:3:2", "--pebbles", "4", "--out", path.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK_THAT(text.str(), StartsWith("MODULE main\nDEFINE n := 4;\n"));
  CHECK_THAT(text.str(), ContainsSubstring("SPEC EF c[3] > 0\n"));
  std::filesystem::remove(path);
  CHECK(pebble({"emit-smv", "--family", "lemke", "--2pp"}).code != 0);
}
