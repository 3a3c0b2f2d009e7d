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
#include <set>

#include "generators.hpp"
#include "oracles.hpp"
#include "pebbling/configuration.hpp"
#include "pebbling/formulas.hpp"

using namespace pebbling;

namespace {

/// Some e with |e| = n and c(v) >= k e(v), by trying every e.
bool extractable(const Configuration& c, std::uint32_t k, std::uint64_t n) {
  std::function<bool(std::size_t, std::uint64_t)> go = [&](std::size_t v, std::uint64_t left) {
    if (left == 0) return true;
    if (v == c.vertex_count()) return false;
    for (std::uint64_t e = 0; e <= left && e * k <= c[v]; ++e)
      if (go(v + 1, left - e)) return true;
    return false;
  };
  return go(0, n);
}

}  // namespace

TEST_CASE("size and support", "[configuration]") {
  Configuration c{0, 3, 0, 2};
  CHECK(c.size() == 5);
  CHECK(c.support_count() == 2);
  CHECK(c.support() == std::vector<std::size_t>{1, 3});
  CHECK(Configuration{0, 1, 0, 2}.is_subconfiguration_of(c));
  CHECK_FALSE(Configuration{1, 0, 0, 0}.is_subconfiguration_of(c));
}

TEST_CASE("add and subtract", "[configuration]") {
  CHECK(add(Configuration{2, 0}, Configuration{0, 3}) == Configuration{2, 3});
  CHECK(subtract(Configuration{5, 5}, Configuration{5, 0}) == Configuration{0, 5});
  CHECK_THROWS_AS(subtract(Configuration{1, 0}, Configuration{2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(add(Configuration{1}, Configuration{1, 0}), std::invalid_argument);
}

TEST_CASE("reduced size examples", "[configuration]") {
  CHECK(reduced_size(Configuration{0, 15, 0}, 3) == 15);
  CHECK(reduced_size(Configuration{13, 13}, 3) == 24);
  CHECK(reduced_size(Configuration{0, 0, 9}, 7) == 9);
  CHECK(reduced_size(Configuration{1, 0}, 2) + reduced_size(Configuration{1, 0}, 2) <=
        reduced_size(Configuration{2, 0}, 2));
}

TEST_CASE("reduced size never exceeds size, equal iff support <= 1", "[configuration][property]") {
  gen::Rng rng(3);
  for (int i = 0; i < 10000; ++i) {
    Configuration c = gen::random_config(rng, rng.between(1, 6), rng.between(0, 20));
    std::uint32_t k = static_cast<std::uint32_t>(rng.between(1, 6));
    auto r = reduced_size(c, k);
    CHECK(r <= static_cast<std::int64_t>(c.size()) + static_cast<std::int64_t>(k) - 1);
    if (c.support_count() >= 1) CHECK(r <= static_cast<std::int64_t>(c.size()));
    if (k > 1 && c.support_count() >= 1) CHECK((r == static_cast<std::int64_t>(c.size())) == (c.support_count() <= 1));
  }
}

TEST_CASE("reduced size is superadditive when supports meet", "[configuration]") {
  for (std::uint32_t k = 1; k <= 4; ++k) {
    for (std::size_t nv = 1; nv <= 3; ++nv) {
      for (std::uint64_t s1 = 0; s1 <= 4 * nv; ++s1) {
        for (const auto& a : oracle::all_configs(nv, s1)) {
          if (*std::max_element(a.begin(), a.end()) > 4 || s1 == 0) continue;
          for (std::uint64_t s2 = 1; s2 <= 4 * nv; ++s2) {
            for (const auto& b : oracle::all_configs(nv, s2)) {
              if (*std::max_element(b.begin(), b.end()) > 4) continue;
              Configuration ca(a), cb(b), sum = add(ca, cb);
              const std::int64_t overlap = static_cast<std::int64_t>(ca.support_count() + cb.support_count()) -
                                           static_cast<std::int64_t>(sum.support_count());
              CHECK(reduced_size(sum, k) ==
                    reduced_size(ca, k) + reduced_size(cb, k) + static_cast<std::int64_t>(k - 1) * (overlap - 1));
              if (overlap >= 1) CHECK(reduced_size(sum, k) >= reduced_size(ca, k) + reduced_size(cb, k));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("block extraction examples", "[configuration]") {
  auto e = extract_blocks(Configuration{7}, 2, 3);
  CHECK(e.blocks == std::vector<Count>{3});
  CHECK(e.residual == Configuration{1});

  auto none = extract_blocks(Configuration{1, 1, 1}, 2, 0);
  CHECK(none.blocks == std::vector<Count>{0, 0, 0});
  CHECK(none.residual == Configuration{1, 1, 1});

  auto two = extract_blocks(Configuration{3, 3}, 2, 2);
  CHECK(two.blocks[0] + two.blocks[1] == 2);
  CHECK(two.residual.size() == 2);

  CHECK_THROWS_AS(extract_blocks(Configuration{2, 2}, 3, 1), insufficient_reduced_size);
}

TEST_CASE("block extraction agrees with a brute-force extractor", "[configuration]") {
  for (std::size_t nv = 1; nv <= 3; ++nv) {
    for (std::uint64_t size = 0; size <= 12; ++size) {
      for (const auto& counts : oracle::all_configs(nv, size)) {
        Configuration c(counts);
        for (std::uint32_t k = 1; k <= 4; ++k) {
          for (std::uint64_t n = 0; n <= 4; ++n) {
            if (reduced_size(c, k) < static_cast<std::int64_t>(n * k)) {
              CHECK_THROWS_AS(extract_blocks(c, k, n), insufficient_reduced_size);
              continue;
            }
            CHECK(extractable(c, k, n));
            auto e = extract_blocks(c, k, n);
            std::uint64_t taken = 0;
            for (std::size_t v = 0; v < nv; ++v) {
              taken += e.blocks[v];
              CHECK(e.residual[v] + k * e.blocks[v] == c[v]);
            }
            CHECK(taken == n);
          }
        }
      }
    }
  }
}

TEST_CASE("single block extraction examples", "[configuration]") {
  auto a = extract_single_block(Configuration{5}, 4, 4);
  CHECK(a.residual == Configuration{1});
  CHECK(reduced_size(Configuration{5}, 4) - reduced_size(a.residual, 4) == 4);

  CHECK_THROWS_AS(extract_single_block(Configuration{2, 2}, 3, 3), insufficient_reduced_size);

  auto b = extract_single_block(Configuration{3, 2}, 3, 3);
  CHECK(b.vertex == 0);
  CHECK(b.residual == Configuration{0, 2});
  CHECK(reduced_size(b.residual, 3) >= reduced_size(Configuration{3, 2}, 3) - 3);
}

TEST_CASE("single block extraction keeps its reduced-size promise", "[configuration][property]") {
  gen::Rng rng(17);
  for (int i = 0; i < 10000; ++i) {
    Configuration c = gen::random_config(rng, rng.between(1, 5), rng.between(1, 25));
    std::uint32_t k = static_cast<std::uint32_t>(rng.between(1, 5));
    std::uint32_t n = static_cast<std::uint32_t>(rng.between(0, k));
    if (reduced_size(c, k) < n) {
      CHECK_THROWS_AS(extract_single_block(c, k, n), insufficient_reduced_size);
      continue;
    }
    auto r = extract_single_block(c, k, n);
    CHECK(r.residual.size() + n == c.size());
    CHECK(reduced_size(r.residual, k) >= reduced_size(c, k) - n);
  }
}

TEST_CASE("enumeration examples", "[configuration]") {
  std::size_t count = 0;
  for (const auto& c : enumerate_configs(3, 4)) {
    CHECK(c.size() == 4);
    ++count;
  }
  CHECK(count == 15);

  std::vector<Configuration> one;
  for (const auto& c : enumerate_configs(1, 5)) one.push_back(c);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Configuration{5});

  std::vector<Configuration> empty;
  for (const auto& c : enumerate_configs(2, 0)) empty.push_back(c);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0] == Configuration{0, 0});
}

TEST_CASE("enumeration matches the oracle, in lexicographic order, without repeats", "[configuration]") {
  for (std::size_t nv = 1; nv <= 5; ++nv) {
    for (std::uint64_t k = 0; k <= 8; ++k) {
      std::vector<oracle::Counts> got;
      for (const auto& c : enumerate_configs(nv, k)) got.push_back(c.counts());
      auto expected = oracle::all_configs(nv, k);  // lexicographic by construction
      CHECK(got == expected);
      CHECK(std::set<oracle::Counts>(got.begin(), got.end()).size() == got.size());
      CHECK(BigInt(got.size()) == config_count(nv, k));
    }
  }
}
