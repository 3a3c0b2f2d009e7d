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
#include <initializer_list>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pebbling {

using Count = std::uint32_t;

/// Pebble counts per vertex, stored densely.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::size_t vertex_count) : counts_(vertex_count, 0) {}
  explicit Configuration(std::vector<Count> counts) : counts_(std::move(counts)) {}
  Configuration(std::initializer_list<Count> counts) : counts_(counts) {}

  std::size_t vertex_count() const { return counts_.size(); }
  Count operator[](std::size_t v) const { return counts_[v]; }
  Count& operator[](std::size_t v) { return counts_[v]; }
  const std::vector<Count>& counts() const { return counts_; }

  /// |c|
  std::uint64_t size() const { return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0}); }

  /// s#(c): the number of occupied vertices.
  std::size_t support_count() const {
    return static_cast<std::size_t>(std::count_if(counts_.begin(), counts_.end(), [](Count c) { return c > 0; }));
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < counts_.size(); ++v)
      if (counts_[v] > 0) s.push_back(v);
    return s;
  }

  /// Pointwise <=, i.e. *this is a subconfiguration of other.
  bool is_subconfiguration_of(const Configuration& other) const {
    if (other.vertex_count() != vertex_count()) return false;
    for (std::size_t v = 0; v < counts_.size(); ++v)
      if (counts_[v] > other.counts_[v]) return false;
    return true;
  }

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration& a, const Configuration& b) { return a.counts_ <=> b.counts_; }

 private:
  std::vector<Count> counts_;
};

inline Configuration add(const Configuration& a, const Configuration& b) {
  if (a.vertex_count() != b.vertex_count()) throw std::invalid_argument("configuration sizes differ");
  Configuration r(a.vertex_count());
  for (std::size_t v = 0; v < a.vertex_count(); ++v) r[v] = a[v] + b[v];
  return r;
}

/// a - b; b must be a subconfiguration of a.
inline Configuration subtract(const Configuration& a, const Configuration& b) {
  if (!b.is_subconfiguration_of(a)) throw std::invalid_argument("subtrahend is not a subconfiguration");
  Configuration r(a.vertex_count());
  for (std::size_t v = 0; v < a.vertex_count(); ++v) r[v] = a[v] - b[v];
  return r;
}

/// r_k(c) = |c| - (k - 1)(s#(c) - 1). The empty configuration yields k - 1.
inline std::int64_t reduced_size(const Configuration& c, std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("reduced size needs k >= 1");
  return static_cast<std::int64_t>(c.size()) -
         static_cast<std::int64_t>(k - 1) * (static_cast<std::int64_t>(c.support_count()) - 1);
}

class insufficient_reduced_size : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct BlockExtraction {
  std::vector<Count> blocks;  // blocks taken per vertex
  Configuration residual;
};

/// Takes n blocks of k pebbles, always from the lowest-id vertex holding at
/// least k. Requires r_k(c) >= n * k.
inline BlockExtraction extract_blocks(const Configuration& c, std::uint32_t k, std::uint64_t n) {
  if (k < 1) throw std::invalid_argument("block size must be >= 1");
  if (reduced_size(c, k) < static_cast<std::int64_t>(n * k)) {
    throw insufficient_reduced_size("insufficient reduced size: r_" + std::to_string(k) + "(c) = " +
                                    std::to_string(reduced_size(c, k)) + " < " + std::to_string(n * k));
  }
  BlockExtraction out{std::vector<Count>(c.vertex_count(), 0), c};
  for (std::uint64_t taken = 0; taken < n; ++taken) {
    std::size_t v = 0;
    while (v < c.vertex_count() && out.residual[v] < k) ++v;
    if (v == c.vertex_count()) throw std::logic_error("block extraction ran out of full vertices");
    out.residual[v] -= k;
    ++out.blocks[v];
  }
  return out;
}

struct SingleBlock {
  std::size_t vertex;
  Configuration residual;
};

/// Removes one block of n <= k pebbles from a single vertex so that
/// r_k(residual) >= r_k(c) - n. Requires r_k(c) >= n.
///
/// Preference order: a vertex holding exactly n (support shrinks, which only
/// helps), then one holding more than n, lowest id first.
inline SingleBlock extract_single_block(const Configuration& c, std::uint32_t k, std::uint32_t n) {
  if (n > k) throw std::invalid_argument("block larger than k");
  const auto before = reduced_size(c, k);
  if (before < static_cast<std::int64_t>(n)) {
    throw insufficient_reduced_size("insufficient reduced size: r_" + std::to_string(k) + "(c) = " +
                                    std::to_string(before) + " < " + std::to_string(n));
  }
  if (n == 0) return {0, c};
  std::size_t chosen = c.vertex_count();
  for (std::size_t v = 0; v < c.vertex_count() && chosen == c.vertex_count(); ++v)
    if (c[v] == n) chosen = v;
  for (std::size_t v = 0; v < c.vertex_count() && chosen == c.vertex_count(); ++v)
    if (c[v] > n) chosen = v;
  // Only reachable for the empty configuration, whose formula value is k - 1.
  if (chosen == c.vertex_count()) throw insufficient_reduced_size("no vertex holds " + std::to_string(n) + " pebbles");
  Configuration residual = c;
  residual[chosen] -= n;
  return {chosen, std::move(residual)};
}

/// All configurations of a fixed size on n vertices, in ascending
/// lexicographic order of the count vectors. Single pass, lazily generated.
class ConfigurationRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Configuration;
    using difference_type = std::ptrdiff_t;
    using pointer = const Configuration*;
    using reference = const Configuration&;

    iterator() = default;
    iterator(Configuration first, bool done) : current_(std::move(first)), done_(done) {}

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }

    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    void advance() {
      const std::size_t n = current_.vertex_count();
      std::size_t last = n;
      for (std::size_t v = n; v-- > 0;) {
        if (current_[v] > 0) {
          last = v;
          break;
        }
      }
      if (last == n || last == 0) {
        done_ = true;
        return;
      }
      Count rest = current_[last] - 1;
      current_[last] = 0;
      current_[last - 1] += 1;
      current_[n - 1] = rest;
    }

    Configuration current_;
    bool done_ = true;
  };

  ConfigurationRange(std::size_t vertex_count, std::uint64_t size) : vertex_count_(vertex_count), size_(size) {
    if (vertex_count == 0) throw std::invalid_argument("enumeration needs at least one vertex");
  }

  iterator begin() const {
    Configuration first(vertex_count_);
    first[vertex_count_ - 1] = static_cast<Count>(size_);
    return iterator(std::move(first), false);
  }
  std::default_sentinel_t end() const { return {}; }

 private:
  std::size_t vertex_count_;
  std::uint64_t size_;
};

inline ConfigurationRange enumerate_configs(std::size_t vertex_count, std::uint64_t size) {
  return ConfigurationRange(vertex_count, size);
}

}  // namespace pebbling
