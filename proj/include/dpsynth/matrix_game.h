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

#ifndef DPSYNTH_MATRIX_GAME_H_
#define DPSYNTH_MATRIX_GAME_H_

#include <cstddef>
#include <vector>

namespace dpsynth {

// Row-major dense matrix.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  DenseMatrix Transposed() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

struct MatrixGameSolution {
  double value = 0.0;
  std::vector<double> row_strategy;     // maximizer
  std::vector<double> column_strategy;  // minimizer
};

// Zero-sum game where the row player maximizes payoff(i, j). Pure saddle
// points are returned directly (lowest row, then lowest column); otherwise
// each player's strategy comes from its own LP with a free value variable.
// Throws ModelError on an empty or non-finite matrix.
MatrixGameSolution SolveMatrixGame(const DenseMatrix& payoff);

}  // namespace dpsynth

#endif  // DPSYNTH_MATRIX_GAME_H_
