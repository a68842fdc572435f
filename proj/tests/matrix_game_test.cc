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
#include "dpsynth/matrix_game.h"
#include "oracles.h"

namespace dpsynth {
namespace {

constexpr double kTol = 1e-7;

// Row strategy guarantees >= value against each column, column strategy
// concedes <= value against each row, and both are distributions.
void ExpectSaddle(const DenseMatrix& a, const MatrixGameSolution& s) {
  ASSERT_EQ(s.row_strategy.size(), a.rows());
  ASSERT_EQ(s.column_strategy.size(), a.cols());
  double row_total = 0.0, col_total = 0.0;
  for (double p : s.row_strategy) {
    EXPECT_GE(p, -kTol);
    row_total += p;
  }
  for (double p : s.column_strategy) {
    EXPECT_GE(p, -kTol);
    col_total += p;
  }
  EXPECT_NEAR(row_total, 1.0, kTol);
  EXPECT_NEAR(col_total, 1.0, kTol);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double v = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) v += s.row_strategy[i] * a(i, j);
    EXPECT_GE(v, s.value - kTol) << "column " << j;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double v = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      v += s.column_strategy[j] * a(i, j);
    }
    EXPECT_LE(v, s.value + kTol) << "row " << i;
  }
}

TEST(SolveMatrixGameTest, ConstantMatrix) {
  MatrixGameSolution s = SolveMatrixGame(DenseMatrix(3, 2, 0.4));
  EXPECT_NEAR(s.value, 0.4, kTol);
  ExpectSaddle(DenseMatrix(3, 2, 0.4), s);
}

TEST(SolveMatrixGameTest, IdentityTwoByTwo) {
  DenseMatrix a(2, 2, {1.0, 0.0, 0.0, 1.0});
  MatrixGameSolution s = SolveMatrixGame(a);
  EXPECT_NEAR(s.value, 0.5, kTol);
  EXPECT_NEAR(s.row_strategy[0], 0.5, kTol);
  EXPECT_NEAR(s.column_strategy[0], 0.5, kTol);
  ExpectSaddle(a, s);
}

TEST(SolveMatrixGameTest, EqualizingTwoByTwo) {
  DenseMatrix a(2, 2, {3.0, 1.0, 0.0, 2.0});
  MatrixGameSolution s = SolveMatrixGame(a);
  EXPECT_NEAR(s.value, 1.5, kTol);
  EXPECT_NEAR(s.row_strategy[0], 0.5, kTol);
  EXPECT_NEAR(s.row_strategy[1], 0.5, kTol);
  EXPECT_NEAR(oracle::GridMatrixGameValue(a), 1.5, 1e-3);
  ExpectSaddle(a, s);
}

TEST(SolveMatrixGameTest, PureSaddlePoint) {
  DenseMatrix a(2, 3, {0.2, 0.5, 0.9, 0.1, 0.8, 0.7});
  MatrixGameSolution s = SolveMatrixGame(a);
  EXPECT_NEAR(s.value, 0.2, kTol);
  EXPECT_EQ(s.row_strategy, (std::vector<double>{1.0, 0.0}));
  EXPECT_EQ(s.column_strategy, (std::vector<double>{1.0, 0.0, 0.0}));
}

TEST(SolveMatrixGameTest, RejectsEmptyOrNonFinite) {
  EXPECT_THROW(SolveMatrixGame(DenseMatrix(0, 2)), ModelError);
  EXPECT_THROW(SolveMatrixGame(DenseMatrix(1, 1, std::nan(""))), ModelError);
}

TEST(SolveMatrixGameTest, RandomGamesAgainstGridSearch) {
  oracle::Rand rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 1 + oracle::IndexBelow(rng, 4);
    const std::size_t n = 1 + oracle::IndexBelow(rng, 4);
    DenseMatrix a = oracle::RandomMatrix(rng, m, n, -1.0, 1.0);
    MatrixGameSolution s = SolveMatrixGame(a);
    EXPECT_NEAR(s.value, oracle::GridMatrixGameValue(a), 2e-3)
        << m << "x" << n << " trial " << trial;
    ExpectSaddle(a, s);
  }
}

TEST(SolveMatrixGameTest, MinimaxDuality) {
  oracle::Rand rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + oracle::IndexBelow(rng, 5);
    const std::size_t n = 1 + oracle::IndexBelow(rng, 5);
    DenseMatrix a = oracle::RandomMatrix(rng, m, n, 0.0, 1.0);
    DenseMatrix neg = a.Transposed();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) neg(i, j) = -neg(i, j);
    }
    EXPECT_NEAR(SolveMatrixGame(a).value, -SolveMatrixGame(neg).value, kTol);
  }
}

TEST(SolveMatrixGameTest, DegenerateGamesKeepValueAndSaddle) {
  // Duplicate rows and columns give many optimal strategies.
  DenseMatrix a(3, 3, {1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0});
  MatrixGameSolution s = SolveMatrixGame(a);
  EXPECT_NEAR(s.value, 0.5, kTol);
  ExpectSaddle(a, s);
}

TEST(SolveMatrixGameTest, Deterministic) {
  oracle::Rand rng(33);
  DenseMatrix a = oracle::RandomMatrix(rng, 4, 4, 0.0, 1.0);
  MatrixGameSolution x = SolveMatrixGame(a), y = SolveMatrixGame(a);
  EXPECT_EQ(x.value, y.value);
  EXPECT_EQ(x.row_strategy, y.row_strategy);
  EXPECT_EQ(x.column_strategy, y.column_strategy);
}

}  // namespace
}  // namespace dpsynth
