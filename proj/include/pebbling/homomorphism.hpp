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
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/families.hpp"
#include "pebbling/graph.hpp"

namespace pebbling {

/// A vertex map that should send every source edge to a target edge of the
/// same weight. Nothing is checked on construction; see validate_homomorphism.
struct Homomorphism {
  Graph source;
  Graph target;
  std::vector<Vertex> map;
};

struct HomomorphismCheck {
  bool valid = false;
  bool surjective = false;
};

inline HomomorphismCheck validate_homomorphism(const Homomorphism& h) {
  if (h.map.size() != h.source.vertex_count()) throw std::invalid_argument("map must cover every source vertex");
  for (Vertex image : h.map) {
    if (image >= h.target.vertex_count()) {
      throw std::invalid_argument("map value " + std::to_string(image) + " out of range");
    }
  }
  HomomorphismCheck out;
  out.valid = true;
  for (const Edge& e : h.source.edges()) {
    auto w = h.target.weight(h.map[e.from], h.map[e.to]);
    if (!w || *w != e.weight) {
      out.valid = false;
      break;
    }
  }
  std::vector<bool> hit(h.target.vertex_count(), false);
  for (Vertex image : h.map) hit[image] = true;
  out.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  return out;
}

/// x -> number of ones in x, from the s-cube with uniform weight k onto the
/// path on s + 1 vertices. Cube vertex ids read as binary with the first
/// factor as the most significant bit.
inline Homomorphism count_homomorphism(std::size_t s, Weight k) {
  if (s >= 32) throw std::invalid_argument("cube dimension too large");
  Homomorphism h{family::hypercube(std::vector<Weight>(s, k)), family::path(s + 1, k), {}};
  for (Vertex x = 0; x < h.source.vertex_count(); ++x)
    h.map.push_back(static_cast<Vertex>(std::popcount(static_cast<std::uint32_t>(x))));
  return h;
}

/// The smallest prime factor of n >= 2.
inline std::int64_t least_prime_factor(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("least prime factor needs n >= 2");
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

/// Surjection arrow(p) x D_{n/p} -> D_n with (0, d) -> d and (1, d) -> p d,
/// where p is the least prime factor of n.
inline Homomorphism arrow_divisor_hom(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("arrow-divisor homomorphism needs n >= 2");
  const std::int64_t p = least_prime_factor(n);
  Graph lower = family::divisor_lattice(n / p);
  Homomorphism h{cartesian_product(family::arrow(static_cast<Weight>(p)), lower), family::divisor_lattice(n), {}};
  for (std::int64_t a = 0; a < 2; ++a) {
    for (Vertex d = 0; d < lower.vertex_count(); ++d) {
      std::int64_t value = lower.label(d) * (a == 0 ? 1 : p);
      h.map.push_back(*h.target.vertex_with_label(value));
    }
  }
  return h;
}

/// Puts c(v) on the lowest-id preimage of each target vertex v.
inline Configuration pullback_config(const Homomorphism& h, const Configuration& c) {
  if (c.vertex_count() != h.target.vertex_count()) throw std::invalid_argument("configuration does not fit target");
  if (h.map.size() != h.source.vertex_count()) throw std::invalid_argument("map must cover every source vertex");
  std::vector<Vertex> representative(h.target.vertex_count(), h.source.vertex_count());
  for (Vertex u = h.source.vertex_count(); u-- > 0;) representative.at(h.map[u]) = u;
  Configuration out(h.source.vertex_count());
  for (Vertex v = 0; v < h.target.vertex_count(); ++v) {
    if (representative[v] == h.source.vertex_count()) {
      throw std::invalid_argument("homomorphism is not surjective: vertex " + std::to_string(v) + " has no preimage");
    }
    out[representative[v]] = c[v];
  }
  return out;
}

inline StepSequence pushforward_steps(const Homomorphism& h, const StepSequence& steps) {
  StepSequence out;
  out.reserve(steps.size());
  for (const Step& s : steps) {
    if (!h.source.has_edge(s.from, s.to)) {
      throw std::invalid_argument("step " + std::to_string(s.from) + " -> " + std::to_string(s.to) +
                                  " is not a source edge");
    }
    out.push_back({h.map.at(s.from), h.map.at(s.to)});
  }
  return out;
}

}  // namespace pebbling
