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

#ifndef PIGAME_LP_HPP
#define PIGAME_LP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "pigame/rational.hpp"

namespace pigame {

/// Exact linear program over free variables:
///
///   minimize    objective . x
///   subject to  A x <= b   (inequality rows)
///               E x  = d   (equality rows)
///
/// Variables are unbounded in sign unless a row bounds them.
struct LPProblem {
  explicit LPProblem(std::size_t variables) : num_vars(variables), objective(variables) {}

  std::size_t num_vars;
  RationalVector objective;
  RationalMatrix ineq_lhs;
  RationalVector ineq_rhs;
  RationalMatrix eq_lhs;
  RationalVector eq_rhs;

  void add_inequality(RationalVector row, Rational rhs);
  void add_equality(RationalVector row, Rational rhs);
};

enum class LPStatus { optimal, infeasible, unbounded };

const char* to_string(LPStatus status);

struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  RationalVector point;                   // empty unless optimal
  Rational value;                         // objective at point
  std::vector<std::size_t> tight_inequalities;  // rows with A_i x == b_i
};

/// Two-phase primal simplex on a dense rational tableau. Free variables are
/// split as x = u - v with u, v >= 0. Pivoting uses Bland's rule (entering:
/// lowest column index with negative reduced cost; leaving: minimum ratio,
/// ties broken by lowest basic column index), so every call terminates and
/// the same input always yields the same vertex.
///
/// Throws ValidationError if a row width differs from num_vars.
LPSolution solve_lp(const LPProblem& problem);

/// Solves M x = rhs for square M by exact Gaussian elimination.
/// Returns std::nullopt when M is singular.
std::optional<RationalVector> solve_linear_system(RationalMatrix matrix, RationalVector rhs);

/// Row rank by exact elimination.
std::size_t matrix_rank(RationalMatrix matrix);

}  // namespace pigame

#endif  // PIGAME_LP_HPP
