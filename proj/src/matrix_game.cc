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

#include "dpsynth/matrix_game.h"

#include <algorithm>
#include <cmath>

#include "dpsynth/error.h"
#include "dpsynth/lp.h"

namespace dpsynth {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw ModelError("matrix data has the wrong size");
  }
}

DenseMatrix DenseMatrix::Transposed() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

namespace {

std::vector<double> Normalized(const std::vector<double>& point,
                               std::size_t count) {
  std::vector<double> p(point.begin(), point.begin() + count);
  double total = 0.0;
  for (double& v : p) {
    v = std::max(v, 0.0);
    total += v;
  }
  for (double& v : p) v /= total;
  return p;
}

// Optimal strategy of the maximizing row player and the game value.
std::pair<std::vector<double>, double> RowStrategy(const DenseMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  LinearProgram lp(m + 1);
  lp.SetObjectiveCoefficient(m, 1.0);
  lp.SetBounds(m, -kInfinity, kInfinity);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> row(m + 1, 0.0);
    for (std::size_t i = 0; i < m; ++i) row[i] = a(i, j);
    row[m] = -1.0;
    lp.AddConstraint(std::move(row), ConstraintSense::kGreaterEqual, 0.0);
  }
  std::vector<double> sum(m + 1, 1.0);
  sum[m] = 0.0;
  lp.AddConstraint(std::move(sum), ConstraintSense::kEqual, 1.0);
  LpSolution s = Solve(lp);
  if (s.status != LpStatus::kOptimal) {
    throw Error("matrix game LP did not reach an optimum");
  }
  return {Normalized(s.point, m), s.value};
}

}  // namespace

MatrixGameSolution SolveMatrixGame(const DenseMatrix& payoff) {
  const std::size_t m = payoff.rows();
  const std::size_t n = payoff.cols();
  if (m == 0 || n == 0) throw ModelError("matrix game has no actions");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(payoff(i, j))) {
        throw ModelError("matrix game has a non-finite payoff");
      }
    }
  }

  MatrixGameSolution out;
  std::size_t best_row = 0;
  double maximin = -kInfinity;
  for (std::size_t i = 0; i < m; ++i) {
    double worst = kInfinity;
    for (std::size_t j = 0; j < n; ++j) worst = std::min(worst, payoff(i, j));
    if (worst > maximin) {
      maximin = worst;
      best_row = i;
    }
  }
  std::size_t best_col = 0;
  double minimax = kInfinity;
  for (std::size_t j = 0; j < n; ++j) {
    double worst = -kInfinity;
    for (std::size_t i = 0; i < m; ++i) worst = std::max(worst, payoff(i, j));
    if (worst < minimax) {
      minimax = worst;
      best_col = j;
    }
  }
  if (maximin == minimax) {
    out.value = maximin;
    out.row_strategy.assign(m, 0.0);
    out.row_strategy[best_row] = 1.0;
    out.column_strategy.assign(n, 0.0);
    out.column_strategy[best_col] = 1.0;
    return out;
  }

  auto [row, value] = RowStrategy(payoff);
  // The minimizer of A is the maximizer of -A^T.
  DenseMatrix negated = payoff.Transposed();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) negated(j, i) = -negated(j, i);
  }
  auto [column, ignored] = RowStrategy(negated);
  out.value = value;
  out.row_strategy = std::move(row);
  out.column_strategy = std::move(column);
  return out;
}

}  // namespace dpsynth
