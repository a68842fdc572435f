// Copyright 2026 The dpsynth Authors.
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

#ifndef DPSYNTH_LP_H_
#define DPSYNTH_LP_H_

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace dpsynth {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Pivot and feasibility tolerance inside the simplex.
inline constexpr double kPivotTolerance = 1e-9;
// Tolerance used when checking a returned solution against the program.
inline constexpr double kVerifyTolerance = 1e-7;

enum class ConstraintSense { kLessEqual, kEqual, kGreaterEqual };

// maximize c.x subject to rows (a.x <sense> b) and lo <= x <= hi. Bounds
// default to [0, +inf); either side may be infinite.
class LinearProgram {
 public:
  struct Constraint {
    std::vector<double> coefficients;
    ConstraintSense sense;
    double rhs;
  };

  explicit LinearProgram(std::size_t num_vars);

  std::size_t num_vars() const { return objective_.size(); }
  const std::vector<double>& objective() const { return objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  double lower(std::size_t j) const { return lower_[j]; }
  double upper(std::size_t j) const { return upper_[j]; }

  void SetObjective(std::vector<double> objective);
  void SetObjectiveCoefficient(std::size_t j, double c) { objective_[j] = c; }
  void AddConstraint(std::vector<double> coefficients, ConstraintSense sense,
                     double rhs);
  void SetBounds(std::size_t j, double lo, double hi);

  // Max violation of the constraints and bounds at `x`.
  double Violation(const std::vector<double>& x) const;

 private:
  std::vector<double> objective_;
  std::vector<Constraint> constraints_;
  std::vector<double> lower_;
  std::vector<double> upper_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double value = 0.0;
  std::vector<double> point;
  // Per constraint, the rate of change of the optimal value with the
  // right-hand side (shadow price).
  std::vector<double> duals;
};

// Dense two-phase tableau simplex with Bland's rule. Deterministic for a
// given program. Throws ModelError on malformed programs (dimension
// mismatch, non-finite coefficients, lo > hi).
LpSolution Solve(const LinearProgram& lp);

// maximize c.x subject to A x <= b, x >= 0, where A is row-major with
// c.size() columns and b >= 0. The origin is then a feasible basis, so a
// single phase on a condensed tableau (one column per original variable)
// suffices. Much cheaper than Solve for many small programs. Duals are not
// reported. Throws ModelError on a size mismatch or a negative entry of b.
LpSolution SolveOriginFeasible(std::span<const double> a,
                               std::span<const double> b,
                               std::span<const double> c);

}  // namespace dpsynth

#endif  // DPSYNTH_LP_H_
