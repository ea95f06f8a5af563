// Copyright 2026 The pigame Authors
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

#include "pigame/lp.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "pigame/errors.hpp"

namespace pigame {

void LPProblem::add_inequality(RationalVector row, Rational rhs) {
  ineq_lhs.push_back(std::move(row));
  ineq_rhs.push_back(std::move(rhs));
}

void LPProblem::add_equality(RationalVector row, Rational rhs) {
  eq_lhs.push_back(std::move(row));
  eq_rhs.push_back(std::move(rhs));
}

const char* to_string(LPStatus status) {
  switch (status) {
    case LPStatus::optimal:
      return "optimal";
    case LPStatus::infeasible:
      return "infeasible";
    case LPStatus::unbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kNoColumn = static_cast<std::size_t>(-1);

// Dense tableau in canonical form: each row i has basic column basis[i] with
// a unit entry there. The last entry of every row is its right-hand side.
class Tableau {
 public:
  Tableau(std::size_t columns) : columns_(columns) {}

  std::size_t columns() const { return columns_; }
  std::size_t rows() const { return rows_.size(); }

  void add_row(RationalVector row, std::size_t basic) {
    rows_.push_back(std::move(row));
    basis_.push_back(basic);
  }

  void erase_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const Rational& rhs(std::size_t r) const { return rows_[r][columns_]; }
  std::size_t basic(std::size_t r) const { return basis_[r]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = rows_[r][c];
    for (auto& v : rows_[r]) v /= p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t k = 0; k <= columns_; ++k) {
        if (rows_[r][k] != 0) rows_[i][k] -= f * rows_[r][k];
      }
    }
    basis_[r] = c;
  }

  // Minimizes cost . z over z >= 0 from the current basic feasible solution,
  // restricted to columns with allowed[c]. Returns false when unbounded.
  bool minimize(const RationalVector& cost, const std::vector<bool>& allowed) {
    std::vector<bool> is_basic(columns_, false);
    for (;;) {
      std::fill(is_basic.begin(), is_basic.end(), false);
      for (const auto b : basis_) is_basic[b] = true;

      std::size_t entering = kNoColumn;
      for (std::size_t c = 0; c < columns_ && entering == kNoColumn; ++c) {
        if (!allowed[c] || is_basic[c]) continue;
        Rational reduced = cost[c];
        for (std::size_t r = 0; r < rows_.size(); ++r) {
          if (rows_[r][c] != 0 && cost[basis_[r]] != 0) reduced -= cost[basis_[r]] * rows_[r][c];
        }
        if (reduced < 0) entering = c;
      }
      if (entering == kNoColumn) return true;

      std::size_t leaving = kNoColumn;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][entering] <= 0) continue;
        Rational ratio = rhs(r) / rows_[r][entering];
        if (leaving == kNoColumn || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == kNoColumn) return false;
      pivot(leaving, entering);
    }
  }

 private:
  std::size_t columns_;
  RationalMatrix rows_;
  std::vector<std::size_t> basis_;
};

void check_widths(const LPProblem& p) {
  if (p.objective.size() != p.num_vars) {
    throw ValidationError("LP objective has " + std::to_string(p.objective.size()) +
                          " entries, expected " + std::to_string(p.num_vars));
  }
  if (p.ineq_lhs.size() != p.ineq_rhs.size() || p.eq_lhs.size() != p.eq_rhs.size()) {
    throw ValidationError("LP row count does not match right-hand side count");
  }
  for (const auto& row : p.ineq_lhs) {
    if (row.size() != p.num_vars) throw ValidationError("LP inequality row has wrong width");
  }
  for (const auto& row : p.eq_lhs) {
    if (row.size() != p.num_vars) throw ValidationError("LP equality row has wrong width");
  }
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

}  // namespace

LPSolution solve_lp(const LPProblem& problem) {
  check_widths(problem);

  const std::size_t n = problem.num_vars;
  const std::size_t m_ineq = problem.ineq_lhs.size();
  const std::size_t m_eq = problem.eq_lhs.size();

  // Columns: [u_0 v_0 u_1 v_1 ...] [slack per inequality] [artificials].
  const std::size_t structural = 2 * n;
  const std::size_t slack_base = structural;
  const std::size_t art_base = slack_base + m_ineq;

  std::size_t artificials = m_eq;
  for (const auto& b : problem.ineq_rhs) {
    if (b < 0) ++artificials;
  }
  const std::size_t columns = art_base + artificials;

  Tableau tab(columns);
  std::size_t next_art = art_base;
  auto make_row = [&](const RationalVector& lhs, const Rational& rhs, bool negate) {
    RationalVector row(columns + 1);
    for (std::size_t j = 0; j < n; ++j) {
      row[2 * j] = negate ? Rational(-lhs[j]) : lhs[j];
      row[2 * j + 1] = -row[2 * j];
    }
    row[columns] = negate ? Rational(-rhs) : rhs;
    return row;
  };
  for (std::size_t i = 0; i < m_ineq; ++i) {
    const bool negate = problem.ineq_rhs[i] < 0;
    RationalVector row = make_row(problem.ineq_lhs[i], problem.ineq_rhs[i], negate);
    row[slack_base + i] = negate ? -1 : 1;
    if (negate) {
      row[next_art] = 1;
      tab.add_row(std::move(row), next_art++);
    } else {
      tab.add_row(std::move(row), slack_base + i);
    }
  }
  for (std::size_t i = 0; i < m_eq; ++i) {
    const bool negate = problem.eq_rhs[i] < 0;
    RationalVector row = make_row(problem.eq_lhs[i], problem.eq_rhs[i], negate);
    row[next_art] = 1;
    tab.add_row(std::move(row), next_art++);
  }

  LPSolution solution;

  if (artificials > 0) {
    RationalVector phase1_cost(columns);
    for (std::size_t c = art_base; c < columns; ++c) phase1_cost[c] = 1;
    const std::vector<bool> all(columns, true);
    tab.minimize(phase1_cost, all);  // bounded below by zero

    Rational infeasibility = 0;
    for (std::size_t r = 0; r < tab.rows(); ++r) {
      if (tab.basic(r) >= art_base) infeasibility += tab.rhs(r);
    }
    if (infeasibility > 0) {
      solution.status = LPStatus::infeasible;
      return solution;
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t r = 0; r < tab.rows();) {
      if (tab.basic(r) < art_base) {
        ++r;
        continue;
      }
      std::size_t col = kNoColumn;
      for (std::size_t c = 0; c < art_base; ++c) {
        if (tab.at(r, c) != 0) {
          col = c;
          break;
        }
      }
      if (col == kNoColumn) {
        tab.erase_row(r);
      } else {
        tab.pivot(r, col);
        ++r;
      }
    }
  }

  RationalVector cost(columns);
  for (std::size_t j = 0; j < n; ++j) {
    cost[2 * j] = problem.objective[j];
    cost[2 * j + 1] = -problem.objective[j];
  }
  std::vector<bool> allowed(columns, false);
  for (std::size_t c = 0; c < art_base; ++c) allowed[c] = true;
  if (!tab.minimize(cost, allowed)) {
    solution.status = LPStatus::unbounded;
    return solution;
  }

  RationalVector column_value(columns);
  for (std::size_t r = 0; r < tab.rows(); ++r) column_value[tab.basic(r)] = tab.rhs(r);
  solution.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    solution.point[j] = column_value[2 * j] - column_value[2 * j + 1];
  }
  solution.status = LPStatus::optimal;
  solution.value = dot(problem.objective, solution.point);

  for (std::size_t i = 0; i < m_ineq; ++i) {
    const Rational lhs = dot(problem.ineq_lhs[i], solution.point);
    if (lhs > problem.ineq_rhs[i]) throw std::logic_error("simplex produced an infeasible point");
    if (lhs == problem.ineq_rhs[i]) solution.tight_inequalities.push_back(i);
  }
  for (std::size_t i = 0; i < m_eq; ++i) {
    if (dot(problem.eq_lhs[i], solution.point) != problem.eq_rhs[i]) {
      throw std::logic_error("simplex violated an equality row");
    }
  }
  return solution;
}

std::optional<RationalVector> solve_linear_system(RationalMatrix matrix, RationalVector rhs) {
  const std::size_t n = matrix.size();
  if (rhs.size() != n) throw ValidationError("linear system: rhs length differs from row count");
  for (const auto& row : matrix) {
    if (row.size() != n) throw ValidationError("linear system: matrix is not square");
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && matrix[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(matrix[pivot], matrix[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (matrix[r][col] == 0) continue;
      const Rational f = matrix[r][col] / matrix[col][col];
      for (std::size_t k = col; k < n; ++k) matrix[r][k] -= f * matrix[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  RationalVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = rhs[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= matrix[i][k] * x[k];
    x[i] = s / matrix[i][i];
  }
  return x;
}

std::size_t matrix_rank(RationalMatrix matrix) {
  if (matrix.empty()) return 0;
  const std::size_t cols = matrix.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < matrix.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < matrix.size() && matrix[pivot][col] == 0) ++pivot;
    if (pivot == matrix.size()) continue;
    std::swap(matrix[pivot], matrix[rank]);
    for (std::size_t r = rank + 1; r < matrix.size(); ++r) {
      if (matrix[r][col] == 0) continue;
      const Rational f = matrix[r][col] / matrix[rank][col];
      for (std::size_t k = col; k < cols; ++k) matrix[r][k] -= f * matrix[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace pigame
