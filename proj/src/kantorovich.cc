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

#include <algorithm>
#include <cmath>

#include "dpsynth/error.h"
#include "dpsynth/lp.h"
#include "dpsynth/privacy.h"
#include "kantorovich_internal.h"

namespace dpsynth {

double DeltaAlpha(double x, double y, double alpha) {
  if (!(alpha >= 1.0)) throw ParameterError("alpha must be at least 1");
  return std::max({x - alpha * y, y - alpha * x, 0.0});
}

double DistanceTable::MaxDifference(const DistanceTable& other) const {
  if (other.n_ != n_) throw ModelError("distance tables differ in size");
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  }
  return worst;
}

namespace internal {

KantorovichContext MakeKantorovichContext(const DistanceTable& d,
                                          double alpha) {
  const std::size_t n = d.num_states();
  KantorovichContext context;
  context.excess.assign(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    double worst = 0.0;
    for (std::size_t w = 0; w < n; ++w) {
      const double ws = d(w, s);
      if (ws <= 0.0) continue;
      for (std::size_t u = 0; u < n; ++u) {
        worst = std::max(worst, (ws - d(w, u)) / alpha - d(u, s));
      }
    }
    context.excess[s] = worst;
  }
  context.near.resize(n);
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t u = 0; u < n; ++u) {
      if (u != w && d(w, u) < 1.0) context.near[w].push_back(u);
    }
  }
  return context;
}

KantorovichResult SolveKantorovich(const Distribution& omega,
                                   const Distribution& omega_prime,
                                   const DistanceTable& d, double alpha,
                                   const KantorovichContext* context) {
  const std::size_t n = d.num_states();
  KantorovichResult result;

  // Objective coefficients live on the union of the supports.
  std::vector<std::size_t> active;
  for (const Successor& e : omega) active.push_back(e.state);
  for (const Successor& e : omega_prime) active.push_back(e.state);
  std::sort(active.begin(), active.end());
  active.erase(std::unique(active.begin(), active.end()), active.end());
  for (std::size_t s : active) {
    if (s >= n) throw ModelError("distribution mentions an unknown state");
  }
  std::vector<double> coefficient(active.size());
  bool any_positive = false;
  for (std::size_t i = 0; i < active.size(); ++i) {
    coefficient[i] = ProbabilityOf(omega, active[i]) -
                     alpha * ProbabilityOf(omega_prime, active[i]);
    any_positive = any_positive || coefficient[i] > 0.0;
  }
  result.active = active;
  if (!any_positive) return result;

  // Scratch kept across calls; only touched entries are reset.
  thread_local std::vector<double> x;
  thread_local std::vector<char> state;  // 0 free, 1 settled, 2 inside
  thread_local std::vector<std::size_t> touched;
  if (x.size() < n) {
    x.assign(n, 0.0);
    state.assign(n, 0);
  }
  auto reset = [&] {
    for (std::size_t u : touched) {
      x[u] = 0.0;
      state[u] = 0;
    }
    touched.clear();
  };

  for (;;) {
    // Rows x_i - alpha x_j <= d(i,j) and x_i <= 1; a pair at distance 1
    // or more is implied by the box.
    const std::size_t k = active.size();
    std::vector<double> rows;
    std::vector<double> rhs;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const double dij = d(active[i], active[j]);
        if (i == j || dij >= 1.0) continue;
        rows.resize(rows.size() + k, 0.0);
        rows[rows.size() - k + i] = 1.0;
        rows[rows.size() - k + j] = -alpha;
        rhs.push_back(dij);
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      rows.resize(rows.size() + k, 0.0);
      rows[rows.size() - k + i] = 1.0;
      rhs.push_back(1.0);
    }
    LpSolution sol = SolveOriginFeasible(rows, rhs, coefficient);
    if (sol.status != LpStatus::kOptimal) {
      reset();
      throw Error("skewed Kantorovich program failed to solve");
    }
    result.value = sol.value;
    if (context) {
      bool exact = true;
      for (std::size_t i = 0; i < k && exact; ++i) {
        exact = context->excess[active[i]] <=
                (alpha - 1.0) * std::max(sol.point[i], 0.0);
      }
      if (exact) break;
    }

    // Cheapest extension outside the active set: each outside value is the
    // largest lower bound (x_w - d(w,u)) / alpha, settled in decreasing order.
    reset();
    std::vector<std::pair<double, std::size_t>> heap;
    for (std::size_t i = 0; i < k; ++i) {
      x[active[i]] = std::clamp(sol.point[i], 0.0, 1.0);
      state[active[i]] = 2;
      touched.push_back(active[i]);
    }
    auto offer = [&](std::size_t w, std::size_t u) {
      if (state[u] != 0) return;
      double v = (x[w] - d(w, u)) / alpha;
      if (v <= x[u]) return;
      if (x[u] == 0.0) touched.push_back(u);
      x[u] = v;
      heap.push_back({v, u});
      std::push_heap(heap.begin(), heap.end());
    };
    auto relax = [&](std::size_t w) {
      if (x[w] <= 0.0) return;
      if (context) {
        for (std::size_t u : context->near[w]) offer(w, u);
      } else {
        for (std::size_t u = 0; u < n; ++u) offer(w, u);
      }
    };
    for (std::size_t s : active) relax(s);
    while (!heap.empty()) {
      std::pop_heap(heap.begin(), heap.end());
      auto [v, u] = heap.back();
      heap.pop_back();
      if (state[u] != 0 || v != x[u]) continue;
      state[u] = 1;
      relax(u);
    }

    // The extension can only violate x_t - alpha x_s <= d(t,s) with t outside
    // and s inside.
    std::vector<std::size_t> violators;
    for (std::size_t t : touched) {
      if (state[t] == 2 || x[t] <= 0.0) continue;
      for (std::size_t s : active) {
        if (x[t] - alpha * x[s] > d(t, s) + 1e-10) {
          violators.push_back(t);
          break;
        }
      }
    }
    if (violators.empty()) break;
    std::sort(violators.begin(), violators.end());
    for (std::size_t t : violators) {
      active.push_back(t);
      coefficient.push_back(0.0);
    }
    // Keep the program deterministic in the state order.
    std::vector<std::size_t> order(active.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return active[a] < active[b]; });
    std::vector<std::size_t> sorted_active;
    std::vector<double> sorted_coefficient;
    for (std::size_t i : order) {
      sorted_active.push_back(active[i]);
      sorted_coefficient.push_back(coefficient[i]);
    }
    active.swap(sorted_active);
    coefficient.swap(sorted_coefficient);
  }
  reset();
  result.active = active;
  return result;
}

}  // namespace internal

double SkewedKantorovichOneSided(const Distribution& omega,
                                 const Distribution& omega_prime,
                                 const DistanceTable& d, double alpha) {
  if (!(alpha >= 1.0)) throw ParameterError("alpha must be at least 1");
  return internal::SolveKantorovich(omega, omega_prime, d, alpha).value;
}

double SkewedKantorovich(const Distribution& omega,
                         const Distribution& omega_prime,
                         const DistanceTable& d, double alpha) {
  if (!(alpha >= 1.0)) throw ParameterError("alpha must be at least 1");
  double forward = internal::SolveKantorovich(omega, omega_prime, d, alpha).value;
  double backward =
      internal::SolveKantorovich(omega_prime, omega, d, alpha).value;
  return std::clamp(std::max(forward, backward), 0.0, 1.0);
}

}  // namespace dpsynth
