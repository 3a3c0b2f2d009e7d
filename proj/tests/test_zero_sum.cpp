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

#include <functional>
#include <numeric>
#include <set>

#include "generators.hpp"
#include "oracles.hpp"
#include "pebbling/families.hpp"
#include "pebbling/flow.hpp"
#include "pebbling/zero_sum.hpp"

using namespace pebbling;

namespace {

std::int64_t sum_of(const std::vector<std::int64_t>& seq, const IndexSet& s) {
  std::int64_t t = 0;
  for (auto i : s) t += seq[i - 1];
  return t;
}

std::int64_t gcd_sum_of(std::int64_t n, const std::vector<std::int64_t>& seq, const IndexSet& s) {
  std::int64_t t = 0;
  for (auto i : s) t += std::gcd(n, seq[i - 1]);
  return t;
}

bool well_formed(const IndexSet& s, std::size_t len) {
  if (s.empty()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > len) return false;
    if (i > 0 && s[i] <= s[i - 1]) return false;
  }
  return true;
}

/// Every multiset of `count` values from `pool`, as non-decreasing lists.
void for_each_multiset(const std::vector<std::int64_t>& pool, std::size_t count,
                       const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> cur;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    if (cur.size() == count) {
      visit(cur);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      go(i);
      cur.pop_back();
    }
  };
  go(0);
}

}  // namespace

TEST_CASE("prefix-sum zero-sum examples", "[zerosum]") {
  CHECK(zero_sum_mod({5}, 1) == IndexSet{1});
  CHECK(zero_sum_mod({1, 2, 3}, 3) == IndexSet{1, 2});
  CHECK(zero_sum_mod({1, 1, 1}, 3) == IndexSet{1, 2, 3});
  CHECK_THROWS_AS(zero_sum_mod({1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(zero_sum_mod({1}, 0), std::invalid_argument);
}

TEST_CASE("prefix-sum zero-sum is a contiguous zero-sum run for every short sequence", "[zerosum]") {
  for (std::size_t len = 1; len <= 6; ++len) {
    std::vector<std::int64_t> seq(len, 0);
    while (true) {
      for (std::int64_t n = 1; n <= static_cast<std::int64_t>(len); ++n) {
        IndexSet s = zero_sum_mod(seq, n);
        REQUIRE(well_formed(s, len));
        CHECK(s.back() - s.front() + 1 == s.size());
        CHECK(s.back() <= static_cast<std::size_t>(n));
        CHECK(sum_of(seq, s) % n == 0);
      }
      std::size_t i = 0;
      while (i < len && ++seq[i] == 6) seq[i++] = 0;
      if (i == len) break;
    }
  }
}

TEST_CASE("construction with a pebble already on the target", "[zerosum]") {
  Graph g = family::path(2, 2);
  Combiner any = [](Vertex, Vertex, const std::vector<IndexSet>& sets) { return sets[0]; };
  CHECK(pebbling_construction(g, 1, {0, 1}, any, {}) == IndexSet{2});
}

TEST_CASE("construction enforces the combiner contract", "[zerosum]") {
  Graph g = family::path(2, 2);
  const std::vector<Vertex> placements{0, 0};
  const StepSequence steps{{0, 1}};
  Combiner empty = [](Vertex, Vertex, const std::vector<IndexSet>&) { return IndexSet{}; };
  Combiner repeat = [](Vertex, Vertex, const std::vector<IndexSet>&) { return IndexSet{1, 1}; };
  Combiner stranger = [](Vertex, Vertex, const std::vector<IndexSet>&) { return IndexSet{3}; };
  Combiner first = [](Vertex, Vertex, const std::vector<IndexSet>& sets) { return sets[0]; };
  CHECK_THROWS_AS(pebbling_construction(g, 1, placements, empty, steps), contract_violation);
  CHECK_THROWS_AS(pebbling_construction(g, 1, placements, repeat, steps), contract_violation);
  CHECK_THROWS_AS(pebbling_construction(g, 1, placements, stranger, steps), contract_violation);
  WellPlaced never_on_one = [](Vertex v, const IndexSet&) { return v == 0; };
  CHECK_THROWS_AS(pebbling_construction(g, 1, placements, first, steps, never_on_one), contract_violation);
  CHECK(pebbling_construction(g, 1, placements, first, steps) == IndexSet{1});
  CHECK_THROWS_AS(pebbling_construction(g, 1, {0}, first, steps), illegal_step);
  CHECK_THROWS_AS(pebbling_construction(g, 1, {0, 0}, first, {}), std::invalid_argument);
}

TEST_CASE("payload sets stay disjoint and match pebble counts", "[zerosum][property]") {
  gen::Rng rng(61);
  for (int i = 0; i < 300; ++i) {
    Graph g = gen::random_connected(rng, rng.between(2, 5), {2, 3}, 0.3, rng.coin());
    Vertex t = rng.below(g.vertex_count());
    Configuration c = gen::random_config(rng, g.vertex_count(), rng.between(1, 20));
    auto f = solve_via_flow(g, c, t, 1);
    if (!f) continue;
    StepSequence steps = realize(g, *f).steps;
    std::vector<Vertex> placements;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      for (Count k = 0; k < c[v]; ++k) placements.push_back(v);
    Configuration live = c;
    Combiner checked = [&](Vertex u, Vertex v, const std::vector<IndexSet>& sets) {
      std::set<std::size_t> seen;
      for (const auto& s : sets)
        for (auto x : s) CHECK(seen.insert(x).second);
      live = apply_step(g, live, u, v);
      return sets[rng.below(sets.size())];
    };
    IndexSet out = pebbling_construction(g, t, placements, checked, steps);
    CHECK(well_formed(out, placements.size()));
    CHECK(live == replay(g, c, steps));
  }
}

TEST_CASE("divisor zero-sum examples", "[zerosum]") {
  CHECK(divisor_zero_sum(1, {1}) == IndexSet{1});
  std::vector<std::int64_t> seq{2, 2, 1, 1};
  IndexSet s = divisor_zero_sum(4, seq);
  CHECK(sum_of(seq, s) == 4);
  CHECK_THROWS_AS(divisor_zero_sum(4, {3, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(divisor_zero_sum(4, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("divisor zero-sum on the sixty example", "[zerosum]") {
  std::vector<std::int64_t> seq;
  seq.insert(seq.end(), 29, 1);
  seq.insert(seq.end(), 15, 2);
  seq.insert(seq.end(), 10, 3);
  seq.insert(seq.end(), 6, 5);
  IndexSet s = divisor_zero_sum(60, seq);
  REQUIRE(well_formed(s, 60));
  CHECK(sum_of(seq, s) == 60);
  CHECK(gcd_zero_sum(60, seq).size() > 0);
}

TEST_CASE("gcd zero-sum examples", "[zerosum]") {
  CHECK(gcd_zero_sum(1, {7}) == IndexSet{1});
  CHECK(gcd_zero_sum(4, {3, 3, 3, 3}) == IndexSet{1, 2, 3, 4});
  CHECK(gcd_zero_sum(2, {1, 1}) == IndexSet{1, 2});
  CHECK_THROWS_AS(gcd_zero_sum(2, {1, 0}), std::invalid_argument);
}

TEST_CASE("gcd zero-sum guarantees hold on random sequences", "[zerosum][property]") {
  gen::Rng rng(67);
  for (int i = 0; i < 2000; ++i) {
    std::int64_t n = static_cast<std::int64_t>(rng.between(1, 36));
    std::vector<std::int64_t> seq;
    for (std::int64_t j = 0; j < n; ++j) seq.push_back(static_cast<std::int64_t>(rng.between(1, 200)));
    IndexSet s = gcd_zero_sum(n, seq);
    REQUIRE(well_formed(s, seq.size()));
    CHECK(sum_of(seq, s) % n == 0);
    CHECK(gcd_sum_of(n, seq, s) <= n);
  }
}

TEST_CASE("Erdos-Lemke examples", "[zerosum]") {
  std::vector<std::int64_t> fours(6, 4);
  IndexSet s = erdos_lemke(12, 6, fours);
  CHECK(s.size() == 3);
  CHECK(sum_of(fours, s) == 12);
  IndexSet t = erdos_lemke(4, 2, {4, 4});
  CHECK(t.size() == 1);
  CHECK(erdos_lemke(6, 6, {1, 1, 1, 1, 1, 1}) == gcd_zero_sum(6, {1, 1, 1, 1, 1, 1}));
  CHECK_THROWS_AS(erdos_lemke(12, 5, {1, 1, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(erdos_lemke(12, 2, {5, 1}), std::invalid_argument);
}

TEST_CASE("every multiset of divisors yields a valid subset", "[zerosum][oracle]") {
  for (std::int64_t n = 1; n <= 10; ++n) {
    auto divs = family::divisors(n);
    for_each_multiset(divs, static_cast<std::size_t>(n), [&](const std::vector<std::int64_t>& seq) {
      auto exists = oracle::find_subset(seq.size(), [&](const std::vector<std::size_t>& s) { return sum_of(seq, s) == n; });
      CHECK(exists.has_value());
      IndexSet s = divisor_zero_sum(n, seq);
      REQUIRE(well_formed(s, seq.size()));
      CHECK(sum_of(seq, s) == n);
    });
    for (std::int64_t d : divs) {
      for_each_multiset(divs, static_cast<std::size_t>(d), [&](const std::vector<std::int64_t>& seq) {
        IndexSet s = erdos_lemke(n, d, seq);
        REQUIRE(well_formed(s, seq.size()));
        CHECK(sum_of(seq, s) % d == 0);
        CHECK(sum_of(seq, s) <= n);
      });
    }
  }
}
