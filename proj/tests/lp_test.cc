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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "dpsynth/error.h"
#include "dpsynth/lp.h"
#include "oracles.h"

namespace dpsynth {
namespace {

constexpr double kTol = 1e-7;

double Dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Random bounded program; the box keeps it bounded, and a feasible interior
// point is planted so it is never infeasible.
LinearProgram RandomProgram(oracle::Rand& rng, std::size_t n, std::size_t m,
                            bool mixed_senses) {
  LinearProgram lp(n);
  std::vector<double> c(n), x0(n);
  for (std::size_t j = 0; j < n; ++j) {
    c[j] = oracle::UniformIn(rng, -1.0, 2.0);
    const double lo = oracle::UniformIn(rng, -2.0, 0.0);
    const double hi = oracle::UniformIn(rng, 1.0, 4.0);
    lp.SetBounds(j, lo, hi);
    x0[j] = oracle::UniformIn(rng, lo, hi);
  }
  lp.SetObjective(c);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> a(n);
    for (double& v : a) v = oracle::UniformIn(rng, -1.0, 1.0);
    const double at = Dot(a, x0);
    const std::size_t kind = mixed_senses ? oracle::IndexBelow(rng, 5) : 0;
    if (kind == 4 && i == 0) {
      lp.AddConstraint(a, ConstraintSense::kEqual, at);
    } else if (kind == 3) {
      lp.AddConstraint(a, ConstraintSense::kGreaterEqual,
                       at - oracle::UniformIn(rng, 0.0, 1.0));
    } else {
      lp.AddConstraint(a, ConstraintSense::kLessEqual,
                       at + oracle::UniformIn(rng, 0.0, 1.0));
    }
  }
  return lp;
}

TEST(SolveTest, SingleBoundedVariable) {
  LinearProgram lp(1);
  lp.SetObjective({1.0});
  lp.AddConstraint({1.0}, ConstraintSense::kLessEqual, 3.0);
  LpSolution s = Solve(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.value, 3.0, kTol);
  EXPECT_NEAR(s.point[0], 3.0, kTol);
  EXPECT_NEAR(s.duals[0], 1.0, kTol);
}

TEST(SolveTest, Simplex) {
  LinearProgram lp(2);
  lp.SetObjective({1.0, 1.0});
  lp.AddConstraint({1.0, 1.0}, ConstraintSense::kLessEqual, 1.0);
  LpSolution s = Solve(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.value, 1.0, kTol);
  EXPECT_LE(lp.Violation(s.point), kTol);
}

TEST(SolveTest, InfeasibleAndUnbounded) {
  LinearProgram infeasible(1);
  infeasible.SetObjective({1.0});
  infeasible.AddConstraint({1.0}, ConstraintSense::kGreaterEqual, 2.0);
  infeasible.AddConstraint({1.0}, ConstraintSense::kLessEqual, 1.0);
  EXPECT_EQ(Solve(infeasible).status, LpStatus::kInfeasible);

  LinearProgram unbounded(2);
  unbounded.SetObjective({1.0, 0.0});
  unbounded.AddConstraint({1.0, -1.0}, ConstraintSense::kLessEqual, 1.0);
  EXPECT_EQ(Solve(unbounded).status, LpStatus::kUnbounded);
}

TEST(SolveTest, FreeAndNegativeBounds) {
  // maximize -|x - 2| style: maximize t with t <= x - 2, t <= 2 - x, x free.
  LinearProgram lp(2);
  lp.SetBounds(0, -kInfinity, kInfinity);
  lp.SetBounds(1, -kInfinity, kInfinity);
  lp.SetObjective({0.0, 1.0});
  lp.AddConstraint({-1.0, 1.0}, ConstraintSense::kLessEqual, -2.0);
  lp.AddConstraint({1.0, 1.0}, ConstraintSense::kLessEqual, 2.0);
  LpSolution s = Solve(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.value, 0.0, kTol);
  EXPECT_NEAR(s.point[0], 2.0, kTol);

  LinearProgram neg(1);
  neg.SetBounds(0, -5.0, -1.0);
  neg.SetObjective({-1.0});
  s = Solve(neg);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.point[0], -5.0, kTol);
}

TEST(SolveTest, EqualityConstraint) {
  LinearProgram lp(3);
  lp.SetObjective({1.0, 2.0, 3.0});
  lp.AddConstraint({1.0, 1.0, 1.0}, ConstraintSense::kEqual, 1.0);
  lp.AddConstraint({0.0, 0.0, 1.0}, ConstraintSense::kLessEqual, 0.25);
  LpSolution s = Solve(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.value, 0.75 * 2.0 + 0.25 * 3.0, kTol);
}

TEST(SolveTest, MalformedProgramsThrow) {
  LinearProgram lp(2);
  EXPECT_THROW(lp.AddConstraint({1.0}, ConstraintSense::kLessEqual, 1.0),
               ModelError);
  EXPECT_THROW(lp.SetBounds(0, 2.0, 1.0), ModelError);
  EXPECT_THROW(lp.SetObjective({1.0}), ModelError);
  LinearProgram nan_lp(1);
  nan_lp.SetObjective({std::nan("")});
  EXPECT_THROW(Solve(nan_lp), ModelError);
}

TEST(SolveTest, RandomProgramsMatchVertexEnumeration) {
  oracle::Rand rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    LinearProgram lp = RandomProgram(rng, 5, 8, trial % 2 == 1);
    LpSolution s = Solve(lp);
    oracle::VertexResult v = oracle::VertexEnumerate(lp);
    ASSERT_TRUE(v.feasible);
    ASSERT_EQ(s.status, LpStatus::kOptimal) << "trial " << trial;
    EXPECT_NEAR(s.value, v.value, 1e-6) << "trial " << trial;
    EXPECT_LE(lp.Violation(s.point), kTol);
    EXPECT_NEAR(s.value, Dot(lp.objective(), s.point), kTol);
  }
}

// Shadow prices against a finite difference of the optimal value.
TEST(SolveTest, DualsMatchRhsPerturbation) {
  oracle::Rand rng(18);
  for (int trial = 0; trial < 50; ++trial) {
    LinearProgram lp = RandomProgram(rng, 4, 6, false);
    LpSolution s = Solve(lp);
    ASSERT_EQ(s.status, LpStatus::kOptimal);
    ASSERT_EQ(s.duals.size(), lp.constraints().size());
    for (std::size_t i = 0; i < lp.constraints().size(); ++i) {
      const double h = 1e-6;
      LinearProgram up(lp.num_vars());
      up.SetObjective(lp.objective());
      for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        up.SetBounds(j, lp.lower(j), lp.upper(j));
      }
      for (std::size_t k = 0; k < lp.constraints().size(); ++k) {
        const auto& c = lp.constraints()[k];
        up.AddConstraint(c.coefficients, c.sense, c.rhs + (k == i ? h : 0.0));
      }
      const double slope = (Solve(up).value - s.value) / h;
      EXPECT_NEAR(s.duals[i], slope, 1e-4) << "trial " << trial << " row " << i;
    }
  }
}

TEST(SolveTest, Deterministic) {
  oracle::Rand rng(19);
  LinearProgram lp = RandomProgram(rng, 6, 10, true);
  LpSolution a = Solve(lp), b = Solve(lp);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.point, b.point);
  EXPECT_EQ(a.duals, b.duals);
}

TEST(SolveTest, DegenerateProgramTerminates) {
  // Many constraints through the optimal vertex.
  LinearProgram lp(3);
  lp.SetObjective({1.0, 1.0, 1.0});
  for (int k = 0; k < 12; ++k) {
    lp.AddConstraint({1.0 + k % 3, 1.0 + k % 2, 1.0}, ConstraintSense::kLessEqual,
                     0.0);
  }
  lp.AddConstraint({1.0, 0.0, 0.0}, ConstraintSense::kLessEqual, 1.0);
  LpSolution s = Solve(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.value, 0.0, kTol);
}

TEST(SolveOriginFeasibleTest, MatchesGeneralSolver) {
  oracle::Rand rng(20);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + oracle::IndexBelow(rng, 6);
    const std::size_t m = 1 + oracle::IndexBelow(rng, 10);
    std::vector<double> a(m * n), b(m), c(n);
    LinearProgram lp(n);
    for (double& v : c) v = oracle::UniformIn(rng, -1.0, 1.0);
    lp.SetObjective(c);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a[i * n + j] = oracle::UniformIn(rng, -1.0, 1.0);
        if (oracle::IndexBelow(rng, 4) == 0) a[i * n + j] = 0.0;
      }
      b[i] = oracle::IndexBelow(rng, 5) == 0 ? 0.0 : oracle::UniformIn(rng, 0.0, 2.0);
      lp.AddConstraint({a.begin() + i * n, a.begin() + (i + 1) * n},
                       ConstraintSense::kLessEqual, b[i]);
    }
    for (std::size_t j = 0; j < n; ++j) lp.SetBounds(j, 0.0, 3.0);
    // Same box for the condensed solver.
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<double> row(n, 0.0);
      row[j] = 1.0;
      a.insert(a.end(), row.begin(), row.end());
      b.push_back(3.0);
    }
    LpSolution fast = SolveOriginFeasible(a, b, c);
    LpSolution slow = Solve(lp);
    ASSERT_EQ(fast.status, LpStatus::kOptimal);
    ASSERT_EQ(slow.status, LpStatus::kOptimal);
    EXPECT_NEAR(fast.value, slow.value, 1e-9) << "trial " << trial;
    EXPECT_LE(lp.Violation(fast.point), kTol);
  }
}

TEST(SolveOriginFeasibleTest, ReportsUnboundedAndRejectsBadInput) {
  std::vector<double> a = {1.0, -1.0}, b = {1.0}, c = {0.0, 1.0};
  EXPECT_EQ(SolveOriginFeasible(a, b, c).status, LpStatus::kUnbounded);
  std::vector<double> neg = {-1.0};
  EXPECT_THROW(SolveOriginFeasible(a, neg, c), ModelError);
  std::vector<double> short_a = {1.0};
  EXPECT_THROW(SolveOriginFeasible(short_a, b, c), ModelError);
}

}  // namespace
}  // namespace dpsynth
