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

#include "dpsynth/lp.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "dpsynth/error.h"

namespace dpsynth {

LinearProgram::LinearProgram(std::size_t num_vars)
    : objective_(num_vars, 0.0),
      lower_(num_vars, 0.0),
      upper_(num_vars, kInfinity) {}

void LinearProgram::SetObjective(std::vector<double> objective) {
  if (objective.size() != num_vars()) {
    throw ModelError("objective has the wrong dimension");
  }
  objective_ = std::move(objective);
}

void LinearProgram::AddConstraint(std::vector<double> coefficients,
                                  ConstraintSense sense, double rhs) {
  if (coefficients.size() != num_vars()) {
    throw ModelError("constraint " + std::to_string(constraints_.size()) +
                     " has the wrong dimension");
  }
  constraints_.push_back({std::move(coefficients), sense, rhs});
}

void LinearProgram::SetBounds(std::size_t j, double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi || lo == kInfinity ||
      hi == -kInfinity) {
    throw ModelError("invalid bounds for variable " + std::to_string(j));
  }
  lower_[j] = lo;
  upper_[j] = hi;
}

double LinearProgram::Violation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (std::size_t j = 0; j < num_vars(); ++j) {
    worst = std::max({worst, lower_[j] - x[j], x[j] - upper_[j]});
  }
  for (const Constraint& c : constraints_) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < num_vars(); ++j) lhs += c.coefficients[j] * x[j];
    switch (c.sense) {
      case ConstraintSense::kLessEqual:
        worst = std::max(worst, lhs - c.rhs);
        break;
      case ConstraintSense::kGreaterEqual:
        worst = std::max(worst, c.rhs - lhs);
        break;
      case ConstraintSense::kEqual:
        worst = std::max(worst, std::abs(lhs - c.rhs));
        break;
    }
  }
  return worst;
}

namespace {

enum class VarKind { kShift, kMirror, kFree };

struct VarMap {
  VarKind kind;
  std::size_t column;
  double offset;
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * (cols + 1), 0.0),
        basis_(rows, 0), cost_(cols + 1, 0.0) {}

  double& at(std::size_t i, std::size_t j) { return data_[i * (cols_ + 1) + j]; }
  double& rhs(std::size_t i) { return at(i, cols_); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }
  // Reduced costs; the last entry holds minus the objective value.
  std::vector<double>& cost() { return cost_; }

  void Pivot(std::size_t p, std::size_t q) {
    const std::size_t w = cols_ + 1;
    double* prow = &data_[p * w];
    const double inv = 1.0 / prow[q];
    for (std::size_t j = 0; j < w; ++j) prow[j] *= inv;
    prow[q] = 1.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == p) continue;
      double* row = &data_[i * w];
      const double f = row[q];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < w; ++j) row[j] -= f * prow[j];
      row[q] = 0.0;
    }
    const double f = cost_[q];
    if (f != 0.0) {
      for (std::size_t j = 0; j < w; ++j) cost_[j] -= f * prow[j];
      cost_[q] = 0.0;
    }
    basis_[p] = q;
  }

  void EraseRow(std::size_t i) {
    const std::size_t w = cols_ + 1;
    data_.erase(data_.begin() + i * w, data_.begin() + (i + 1) * w);
    basis_.erase(basis_.begin() + i);
    --rows_;
  }

  // Bland's rule: lowest eligible entering column, ratio ties broken by the
  // lowest leaving basic variable. Returns false when unbounded.
  bool Optimize(const std::vector<bool>& eligible) {
    for (;;) {
      std::size_t q = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (eligible[j] && cost_[j] > kPivotTolerance) {
          q = j;
          break;
        }
      }
      if (q == cols_) return true;
      std::size_t p = rows_;
      double best = kInfinity;
      for (std::size_t i = 0; i < rows_; ++i) {
        double a = at(i, q);
        if (a <= kPivotTolerance) continue;
        double ratio = std::max(rhs(i), 0.0) / a;
        if (p == rows_ || ratio < best - 1e-12) {
          best = ratio;
          p = i;
        } else if (ratio <= best + 1e-12 && basis_[i] < basis_[p]) {
          p = i;
        }
      }
      if (p == rows_) return false;
      Pivot(p, q);
    }
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
  std::vector<double> cost_;
};

void Validate(const LinearProgram& lp) {
  for (double c : lp.objective()) {
    if (!std::isfinite(c)) throw ModelError("non-finite objective coefficient");
  }
  for (const auto& c : lp.constraints()) {
    if (!std::isfinite(c.rhs)) throw ModelError("non-finite right-hand side");
    for (double a : c.coefficients) {
      if (!std::isfinite(a)) {
        throw ModelError("non-finite constraint coefficient");
      }
    }
  }
}

}  // namespace

LpSolution Solve(const LinearProgram& lp) {
  Validate(lp);
  const std::size_t n = lp.num_vars();

  // Substitute every variable by non-negative columns.
  std::vector<VarMap> vars(n);
  std::size_t ny = 0;
  struct Row {
    std::vector<std::pair<std::size_t, double>> terms;
    ConstraintSense sense;
    double rhs;
  };
  std::vector<Row> rows;
  std::vector<bool> flipped;
  for (std::size_t j = 0; j < n; ++j) {
    const double lo = lp.lower(j);
    const double hi = lp.upper(j);
    if (std::isfinite(lo)) {
      vars[j] = {VarKind::kShift, ny++, lo};
      if (std::isfinite(hi)) {
        rows.push_back({{{vars[j].column, 1.0}},
                        ConstraintSense::kLessEqual,
                        hi - lo});
      }
    } else if (std::isfinite(hi)) {
      vars[j] = {VarKind::kMirror, ny++, hi};
    } else {
      vars[j] = {VarKind::kFree, ny, 0.0};
      ny += 2;
    }
  }
  std::vector<double> cy(ny, 0.0);
  auto lift = [&](std::size_t j, double a,
                  std::vector<std::pair<std::size_t, double>>& terms) {
    const VarMap& v = vars[j];
    switch (v.kind) {
      case VarKind::kShift:
        terms.push_back({v.column, a});
        return a * v.offset;
      case VarKind::kMirror:
        terms.push_back({v.column, -a});
        return a * v.offset;
      case VarKind::kFree:
        terms.push_back({v.column, a});
        terms.push_back({v.column + 1, -a});
        return 0.0;
    }
    return 0.0;
  };
  {
    std::vector<std::pair<std::size_t, double>> terms;
    for (std::size_t j = 0; j < n; ++j) {
      if (lp.objective()[j] != 0.0) lift(j, lp.objective()[j], terms);
    }
    for (auto [col, a] : terms) cy[col] += a;
  }
  for (const auto& c : lp.constraints()) {
    Row row{{}, c.sense, c.rhs};
    for (std::size_t j = 0; j < n; ++j) {
      if (c.coefficients[j] != 0.0) {
        row.rhs -= lift(j, c.coefficients[j], row.terms);
      }
    }
    rows.push_back(std::move(row));
  }

  // Non-negative right-hand sides, then slack / surplus / artificial columns.
  std::size_t num_slack = 0;
  std::size_t num_art = 0;
  const std::size_t first_constraint = rows.size() - lp.constraints().size();
  for (Row& r : rows) {
    flipped.push_back(r.rhs < 0);
    if (r.rhs < 0) {
      r.rhs = -r.rhs;
      for (auto& t : r.terms) t.second = -t.second;
      if (r.sense == ConstraintSense::kLessEqual) {
        r.sense = ConstraintSense::kGreaterEqual;
      } else if (r.sense == ConstraintSense::kGreaterEqual) {
        r.sense = ConstraintSense::kLessEqual;
      }
    }
    if (r.sense != ConstraintSense::kEqual) ++num_slack;
    if (r.sense != ConstraintSense::kLessEqual) ++num_art;
  }
  const std::size_t m = rows.size();
  const std::size_t art0 = ny + num_slack;
  const std::size_t cols = art0 + num_art;
  Tableau t(m, cols);
  // Column that starts as the unit vector of each row.
  std::vector<std::size_t> unit_column(m);
  std::size_t next_slack = ny;
  std::size_t next_art = art0;
  double max_rhs = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const Row& r = rows[i];
    for (auto [col, a] : r.terms) t.at(i, col) += a;
    t.rhs(i) = r.rhs;
    max_rhs = std::max(max_rhs, r.rhs);
    if (r.sense == ConstraintSense::kLessEqual) {
      t.at(i, next_slack) = 1.0;
      unit_column[i] = next_slack;
      t.basis()[i] = next_slack++;
    } else {
      if (r.sense == ConstraintSense::kGreaterEqual) {
        t.at(i, next_slack++) = -1.0;
      }
      t.at(i, next_art) = 1.0;
      unit_column[i] = next_art;
      t.basis()[i] = next_art++;
    }
  }

  LpSolution solution;
  std::vector<bool> eligible(cols, true);

  // Phase 1: maximize minus the sum of artificials.
  if (num_art > 0) {
    auto& cost = t.cost();
    std::fill(cost.begin(), cost.end(), 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis()[i] < art0) continue;
      for (std::size_t j = 0; j <= cols; ++j) {
        if (j < art0 || j == cols) cost[j] += t.at(i, j);
      }
    }
    t.Optimize(eligible);
    if (cost[cols] > 1e-8 * (1.0 + max_rhs)) {
      solution.status = LpStatus::kInfeasible;
      return solution;
    }
    for (std::size_t i = t.rows(); i-- > 0;) {
      if (t.basis()[i] < art0) continue;
      std::size_t q = art0;
      for (std::size_t j = 0; j < art0; ++j) {
        if (std::abs(t.at(i, j)) > kPivotTolerance) {
          q = j;
          break;
        }
      }
      if (q < art0) {
        t.Pivot(i, q);
      } else {
        t.EraseRow(i);
      }
    }
    for (std::size_t j = art0; j < cols; ++j) eligible[j] = false;
  }

  // Phase 2.
  {
    auto& cost = t.cost();
    std::fill(cost.begin(), cost.end(), 0.0);
    for (std::size_t j = 0; j < ny; ++j) cost[j] = cy[j];
    for (std::size_t i = 0; i < t.rows(); ++i) {
      const double cb = t.basis()[i] < ny ? cy[t.basis()[i]] : 0.0;
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j <= cols; ++j) cost[j] -= cb * t.at(i, j);
    }
    if (!t.Optimize(eligible)) {
      solution.status = LpStatus::kUnbounded;
      return solution;
    }
  }

  std::vector<double> y(ny, 0.0);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (t.basis()[i] < ny) y[t.basis()[i]] = std::max(t.rhs(i), 0.0);
  }
  solution.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const VarMap& v = vars[j];
    switch (v.kind) {
      case VarKind::kShift:
        solution.point[j] = v.offset + y[v.column];
        break;
      case VarKind::kMirror:
        solution.point[j] = v.offset - y[v.column];
        break;
      case VarKind::kFree:
        solution.point[j] = y[v.column] - y[v.column + 1];
        break;
    }
  }
  // The reduced cost of a row's unit column is minus its shadow price.
  solution.duals.resize(lp.constraints().size());
  for (std::size_t i = 0; i < lp.constraints().size(); ++i) {
    const std::size_t row = first_constraint + i;
    const double price = -t.cost()[unit_column[row]];
    solution.duals[i] = flipped[row] ? -price : price;
  }
  solution.status = LpStatus::kOptimal;
  solution.value = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    solution.value += lp.objective()[j] * solution.point[j];
  }
  return solution;
}

LpSolution SolveOriginFeasible(std::span<const double> a,
                               std::span<const double> b,
                               std::span<const double> c) {
  const std::size_t m = b.size();
  const std::size_t n = c.size();
  if (a.size() != m * n) throw ModelError("constraint matrix size mismatch");
  for (double v : b) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw ModelError("right-hand side must be finite and non-negative");
    }
  }
  for (double v : a) {
    if (!std::isfinite(v)) throw ModelError("non-finite coefficient");
  }
  for (double v : c) {
    if (!std::isfinite(v)) throw ModelError("non-finite objective");
  }

  // Row i reads y_i = rhs_i - sum_j t_ij z_j over the current nonbasic z.
  // Variables 0..n-1 are the originals, n..n+m-1 the slacks.
  std::vector<double> t(a.begin(), a.end());
  std::vector<double> rhs(b.begin(), b.end());
  std::vector<double> cost(c.begin(), c.end());
  std::vector<std::size_t> basic(m);
  std::vector<std::size_t> nonbasic(n);
  for (std::size_t i = 0; i < m; ++i) basic[i] = n + i;
  for (std::size_t j = 0; j < n; ++j) nonbasic[j] = j;

  LpSolution solution;
  // Largest reduced cost first; after a long run of degenerate pivots,
  // Bland's rule over variable identities for the rest, which cannot cycle.
  constexpr std::size_t kMaxDegenerateRun = 50;
  std::size_t degenerate_run = 0;
  bool bland = false;
  for (;;) {
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (cost[j] <= kPivotTolerance) continue;
      if (col == n || (bland ? nonbasic[j] < nonbasic[col]
                             : cost[j] > cost[col])) {
        col = j;
      }
    }
    if (col == n) break;
    std::size_t row = m;
    double best = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double p = t[i * n + col];
      if (p <= kPivotTolerance) continue;
      const double ratio = rhs[i] / p;
      if (row == m || ratio < best ||
          (ratio == best && basic[i] < basic[row])) {
        row = i;
        best = ratio;
      }
    }
    if (row == m) {
      solution.status = LpStatus::kUnbounded;
      return solution;
    }

    degenerate_run = best > 0.0 ? 0 : degenerate_run + 1;
    bland = bland || degenerate_run > kMaxDegenerateRun;

    const double p = t[row * n + col];
    double* pivot_row = &t[row * n];
    for (std::size_t j = 0; j < n; ++j) pivot_row[j] /= p;
    pivot_row[col] = 1.0 / p;
    rhs[row] /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row) continue;
      double* r = &t[i * n];
      const double f = r[col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) r[j] -= f * pivot_row[j];
      r[col] = -f / p;
      rhs[i] = std::max(rhs[i] - f * rhs[row], 0.0);
    }
    const double f = cost[col];
    for (std::size_t j = 0; j < n; ++j) cost[j] -= f * pivot_row[j];
    cost[col] = -f / p;
    std::swap(basic[row], nonbasic[col]);
  }

  solution.status = LpStatus::kOptimal;
  solution.point.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basic[i] < n) solution.point[basic[i]] = rhs[i];
  }
  solution.value = 0.0;
  for (std::size_t j = 0; j < n; ++j) solution.value += c[j] * solution.point[j];
  return solution;
}

}  // namespace dpsynth
