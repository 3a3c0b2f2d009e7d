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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pebbling {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational as "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

/// Largest integer <= r.
inline BigInt floor(const Rational& r) {
  BigInt q = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
  if (r < 0 && Rational(q) != r) q -= 1;
  return q;
}

/// coefficients . x <= bound
struct LinearConstraint {
  std::vector<Rational> coefficients;
  Rational bound;
};

/// maximize objective . x subject to the constraints and x >= 0.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
};

struct LpSolution {
  Rational optimum;
  std::vector<Rational> primal;
  std::vector<Rational> dual;  // one multiplier per constraint, >= 0
};

class lp_infeasible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class lp_unbounded : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

/// Dense tableau. Row 0 is the objective row holding reduced costs; the
/// last column is the right-hand side.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : cells_(rows + 1, std::vector<Rational>(cols + 1)), basis_(rows) {}

  Rational& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
  Rational& rhs(std::size_t r) { return cells_[r].back(); }
  std::size_t rows() const { return cells_.size() - 1; }
  std::size_t cols() const { return cells_[0].size() - 1; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t row, std::size_t col) {
    Rational p = cells_[row][col];
    for (auto& x : cells_[row]) x /= p;
    for (std::size_t r = 0; r < cells_.size(); ++r) {
      if (r == row || cells_[r][col] == 0) continue;
      Rational f = cells_[r][col];
      for (std::size_t c = 0; c < cells_[r].size(); ++c) cells_[r][c] -= f * cells_[row][c];
    }
    basis_[row - 1] = col;
  }

  /// Bland's rule: lowest-index improving column, ties in the ratio test go
  /// to the lowest basic variable. Columns flagged in `blocked` never enter.
  /// Returns false when unbounded.
  bool optimize(const std::vector<bool>& blocked) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t c = 0; c < cols(); ++c) {
        if (!blocked[c] && cells_[0][c] < 0) {
          enter = c;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 1; r <= rows(); ++r) {
        if (cells_[r][*enter] <= 0) continue;
        Rational ratio = cells_[r].back() / cells_[r][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[r - 1] < basis_[*leave - 1])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

 private:
  std::vector<std::vector<Rational>> cells_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Exact two-phase simplex with Bland's anti-cycling rule.
///
/// Columns: n structural, m slack, then one artificial per row with a
/// negative bound. Duals are read off the slack reduced costs.
inline LpSolution simplex_max(const LinearProgram& lp) {
  const std::size_t n = lp.objective.size();
  const std::size_t m = lp.constraints.size();
  for (const auto& con : lp.constraints) {
    if (con.coefficients.size() != n) throw std::invalid_argument("constraint dimension does not match objective");
  }
  std::vector<std::size_t> negative_rows;
  for (std::size_t i = 0; i < m; ++i)
    if (lp.constraints[i].bound < 0) negative_rows.push_back(i);
  const std::size_t art0 = n + m;
  const std::size_t cols = art0 + negative_rows.size();
  detail::Tableau tab(m, cols);
  std::vector<Rational> sign(m, 1);
  std::size_t next_art = art0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& con = lp.constraints[i];
    if (con.bound < 0) sign[i] = -1;
    for (std::size_t j = 0; j < n; ++j) tab.at(i + 1, j) = sign[i] * con.coefficients[j];
    tab.at(i + 1, n + i) = sign[i];
    tab.rhs(i + 1) = sign[i] * con.bound;
    if (con.bound < 0) {
      tab.at(i + 1, next_art) = 1;
      tab.basis()[i] = next_art++;
    } else {
      tab.basis()[i] = n + i;
    }
  }

  std::vector<bool> blocked(cols, false);
  if (!negative_rows.empty()) {
    // Phase one: maximize minus the sum of artificials.
    for (std::size_t a = art0; a < cols; ++a) tab.at(0, a) = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis()[i] < art0) continue;
      for (std::size_t c = 0; c <= cols; ++c) tab.at(0, c) -= tab.at(i + 1, c);
    }
    tab.optimize(blocked);
    if (tab.rhs(0) != 0) throw lp_infeasible("linear program is infeasible");
    // Drive zero-level artificials out of the basis where possible.
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis()[i] < art0) continue;
      for (std::size_t c = 0; c < art0; ++c) {
        if (tab.at(i + 1, c) != 0) {
          tab.pivot(i + 1, c);
          break;
        }
      }
    }
    for (std::size_t a = art0; a < cols; ++a) blocked[a] = true;
  }

  // Phase two objective row: reduced costs c_B B^-1 A - c.
  for (std::size_t c = 0; c <= cols; ++c) tab.at(0, c) = 0;
  for (std::size_t j = 0; j < n; ++j) tab.at(0, j) = -lp.objective[j];
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t b = tab.basis()[i];
    if (b >= n || lp.objective[b] == 0) continue;
    Rational f = tab.at(0, b);
    for (std::size_t c = 0; c <= cols; ++c) tab.at(0, c) -= f * tab.at(i + 1, c);
  }
  if (!tab.optimize(blocked)) throw lp_unbounded("linear program is unbounded");

  LpSolution sol;
  sol.optimum = tab.rhs(0);
  sol.primal.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis()[i] < n) sol.primal[tab.basis()[i]] = tab.rhs(i + 1);
  sol.dual.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) sol.dual[i] = tab.at(0, n + i);
  return sol;
}

}  // namespace pebbling
