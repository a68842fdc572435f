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

#include "dpsynth/synthesis.h"

#include <algorithm>
#include <cmath>

#include "dpsynth/error.h"
#include "dpsynth/lp.h"
#include "dpsynth/matrix_game.h"

namespace dpsynth {
namespace {

void CheckOptions(const IterationOptions& options) {
  if (!(options.tol > 0.0)) throw ParameterError("tolerance must be positive");
}

// Expected value of `v` under the product row (x, d, a).
double Expect(const ProductGame& product, std::size_t x, std::size_t d,
              std::size_t a, const std::vector<double>& v) {
  double sum = 0.0;
  for (const Successor& e : product.transition(x, d, a)) {
    sum += e.prob * v[e.state];
  }
  return sum;
}

DenseMatrix Payoff(const ProductGame& product, std::size_t x,
                   const std::vector<double>& v) {
  const std::size_t nd = product.num_def_actions();
  const std::size_t na = product.num_adv_actions();
  DenseMatrix m(nd, na);
  for (std::size_t d = 0; d < nd; ++d) {
    for (std::size_t a = 0; a < na; ++a) m(d, a) = Expect(product, x, d, a, v);
  }
  return m;
}

// Among row strategies p with min_a (p M)_a >= target, one maximizing the
// worst-case probability of entering `ranked`. Returns an empty vector if
// that probability is not positive.
std::vector<double> ProgressStrategy(const ProductGame& product, std::size_t x,
                                     const DenseMatrix& payoff, double target,
                                     const std::vector<bool>& ranked) {
  const std::size_t nd = product.num_def_actions();
  const std::size_t na = product.num_adv_actions();
  LinearProgram lp(nd + 1);
  lp.SetObjectiveCoefficient(nd, 1.0);
  lp.SetBounds(nd, 0.0, 1.0);
  for (std::size_t a = 0; a < na; ++a) {
    std::vector<double> keep(nd + 1, 0.0);
    std::vector<double> enter(nd + 1, 0.0);
    for (std::size_t d = 0; d < nd; ++d) {
      keep[d] = payoff(d, a);
      for (const Successor& e : product.transition(x, d, a)) {
        if (ranked[e.state]) enter[d] += e.prob;
      }
    }
    enter[nd] = -1.0;
    lp.AddConstraint(std::move(keep), ConstraintSense::kGreaterEqual,
                     target - 1e-11);
    lp.AddConstraint(std::move(enter), ConstraintSense::kGreaterEqual, 0.0);
  }
  std::vector<double> sum(nd + 1, 1.0);
  sum[nd] = 0.0;
  lp.AddConstraint(std::move(sum), ConstraintSense::kEqual, 1.0);
  LpSolution s = Solve(lp);
  if (s.status != LpStatus::kOptimal || s.value <= 1e-9) return {};
  std::vector<double> p(s.point.begin(), s.point.begin() + nd);
  double total = 0.0;
  for (double& v : p) {
    if (v < 1e-12) v = 0.0;
    total += v;
  }
  for (double& v : p) v /= total;
  return p;
}

void BellmanSweep(const LabeledMdp& mdp, const std::vector<double>& v,
                  std::vector<double>& next) {
  for (std::size_t x = 0; x < mdp.num_states(); ++x) {
    if (mdp.terminal(x)) {
      next[x] = 1.0;
      continue;
    }
    double best = 0.0;
    for (std::size_t a : mdp.enabled(x)) {
      double q = 0.0;
      for (const Successor& s : mdp.transition(x, a)) q += s.prob * v[s.state];
      best = std::max(best, q);
    }
    next[x] = std::min(best, 1.0);
  }
}

}  // namespace

SynthesisResult StackelbergValueIteration(const ProductGame& product,
                                          const AcceptingSet& e,
                                          const IterationOptions& options) {
  CheckOptions(options);
  const std::size_t n = product.num_states();
  const std::size_t nd = product.num_def_actions();
  std::vector<double> v(n, 0.0);
  for (std::size_t x = 0; x < n; ++x) {
    if (e.member[x]) v[x] = 1.0;
  }
  // States that cannot reach E along any transition keep value 0 and need
  // no matrix games.
  std::vector<bool> live(n, false);
  {
    std::vector<std::vector<std::size_t>> predecessors(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t d = 0; d < nd; ++d) {
        for (std::size_t a = 0; a < product.num_adv_actions(); ++a) {
          for (const Successor& s : product.transition(x, d, a)) {
            predecessors[s.state].push_back(x);
          }
        }
      }
    }
    std::vector<std::size_t> stack = e.States();
    for (std::size_t x : stack) live[x] = true;
    while (!stack.empty()) {
      std::size_t y = stack.back();
      stack.pop_back();
      for (std::size_t x : predecessors[y]) {
        if (!live[x]) {
          live[x] = true;
          stack.push_back(x);
        }
      }
    }
  }

  SynthesisResult result;
  std::vector<double> next = v;
  for (std::size_t it = 0; it < options.max_iter; ++it) {
    double change = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      if (e.member[x] || !live[x]) continue;
      next[x] = std::clamp(SolveMatrixGame(Payoff(product, x, v)).value, 0.0,
                           1.0);
      change = std::max(change, std::abs(next[x] - v[x]));
    }
    v.swap(next);
    result.values.iterations = it + 1;
    if (change < options.tol) {
      result.values.converged = true;
      break;
    }
  }
  result.values.values = v;

  std::vector<std::vector<double>> mu(n, std::vector<double>(nd, 0.0));
  std::vector<bool> ranked(n, false);
  std::vector<bool> done(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (e.member[x]) {
      const auto& stay = e.stay_actions[x];
      for (std::size_t d : stay) mu[x][d] = 1.0 / stay.size();
      ranked[x] = done[x] = true;
    } else if (v[x] <= 0.0) {
      mu[x] = SolveMatrixGame(Payoff(product, x, v)).row_strategy;
      done[x] = true;
    }
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<bool> layer = ranked;
    for (std::size_t x = 0; x < n; ++x) {
      if (done[x]) continue;
      DenseMatrix payoff = Payoff(product, x, v);
      std::vector<double> p = ProgressStrategy(product, x, payoff, v[x], ranked);
      if (p.empty()) continue;
      mu[x] = std::move(p);
      layer[x] = done[x] = true;
      grew = true;
    }
    ranked.swap(layer);
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!done[x]) mu[x] = SolveMatrixGame(Payoff(product, x, v)).row_strategy;
  }
  result.mu = MixedPolicy(std::move(mu), nd);
  return result;
}

ValueTable ReachProbability(const ProductGame& product, const MixedPolicy& mu,
                            const AcceptingSet& e,
                            const IterationOptions& options) {
  CheckOptions(options);
  const std::size_t n = product.num_states();
  const std::size_t nd = product.num_def_actions();
  const std::size_t na = product.num_adv_actions();
  ValueTable table;
  std::vector<double> v(n, 0.0);
  for (std::size_t x = 0; x < n; ++x) {
    if (e.member[x]) v[x] = 1.0;
  }
  std::vector<double> next = v;
  for (std::size_t it = 0; it < options.max_iter; ++it) {
    double change = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      if (e.member[x]) continue;
      double best = kInfinity;
      for (std::size_t a = 0; a < na; ++a) {
        double q = 0.0;
        for (std::size_t d = 0; d < nd; ++d) {
          if (mu(x, d) > 0.0) q += mu(x, d) * Expect(product, x, d, a, v);
        }
        best = std::min(best, q);
      }
      next[x] = std::clamp(best, 0.0, 1.0);
      change = std::max(change, std::abs(next[x] - v[x]));
    }
    v.swap(next);
    table.iterations = it + 1;
    if (change < options.tol) {
      table.converged = true;
      break;
    }
  }
  table.values = std::move(v);
  return table;
}

MixedPolicy BestResponseAdversary(const ProductGame& product,
                                  const MixedPolicy& mu, const AcceptingSet& e,
                                  const IterationOptions& options) {
  const std::vector<double> v =
      ReachProbability(product, mu, e, options).values;
  const std::size_t n = product.num_states();
  const std::size_t nd = product.num_def_actions();
  const std::size_t na = product.num_adv_actions();
  std::vector<std::size_t> choice(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (e.member[x]) continue;
    double best = kInfinity;
    for (std::size_t a = 0; a < na; ++a) {
      double q = 0.0;
      for (std::size_t d = 0; d < nd; ++d) {
        if (mu(x, d) > 0.0) q += mu(x, d) * Expect(product, x, d, a, v);
      }
      if (q < best - 1e-12) {
        best = q;
        choice[x] = a;
      }
    }
  }
  return MixedPolicy::Deterministic(choice, na);
}

ValueTable BellmanValuesUnderPolicy(const LabeledMdp& mdp,
                                    const IterationOptions& options) {
  CheckOptions(options);
  const std::size_t n = mdp.num_states();
  ValueTable table;
  std::vector<double> v(n, 0.0), next(n, 0.0);
  for (std::size_t it = 0; it < options.max_iter; ++it) {
    BellmanSweep(mdp, v, next);
    double change = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      change = std::max(change, std::abs(next[x] - v[x]));
    }
    v.swap(next);
    table.iterations = it + 1;
    if (change < options.tol) {
      table.converged = true;
      break;
    }
  }
  table.values = std::move(v);
  return table;
}

std::vector<std::vector<double>> BellmanIterates(const LabeledMdp& mdp,
                                                 std::size_t n) {
  std::vector<std::vector<double>> out{
      std::vector<double>(mdp.num_states(), 0.0)};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> next(mdp.num_states(), 0.0);
    BellmanSweep(mdp, out.back(), next);
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace dpsynth
