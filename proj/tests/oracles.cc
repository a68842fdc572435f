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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dpsynth::oracle {

double UniformIn(Rand& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::size_t IndexBelow(Rand& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Distribution RandomDistribution(Rand& rng, std::size_t n,
                                std::size_t max_support) {
  std::vector<std::size_t> states(n);
  std::iota(states.begin(), states.end(), 0);
  std::shuffle(states.begin(), states.end(), rng);
  const std::size_t k = 1 + IndexBelow(rng, std::min(max_support, n));
  std::vector<double> w(k);
  double total = 0.0;
  for (double& v : w) total += v = UniformIn(rng, 0.05, 1.0);
  std::vector<Successor> entries;
  for (std::size_t i = 0; i < k; ++i) entries.push_back({states[i], w[i] / total});
  return MakeDistribution(std::move(entries), n, "random distribution");
}

LabeledMdp RandomMdp(Rand& rng, std::size_t num_states, std::size_t num_actions,
                     std::size_t num_labels, double p_terminal) {
  std::vector<Distribution> rows;
  std::vector<std::vector<std::size_t>> enabled(num_states);
  std::vector<std::size_t> labels(num_states);
  StateMask terminal(num_states, false);
  for (std::size_t x = 0; x < num_states; ++x) {
    for (std::size_t a = 0; a < num_actions; ++a) {
      rows.push_back(RandomDistribution(rng, num_states, num_states));
      if (UniformIn(rng, 0.0, 1.0) < 0.7) enabled[x].push_back(a);
    }
    if (enabled[x].empty()) enabled[x].push_back(IndexBelow(rng, num_actions));
    labels[x] = IndexBelow(rng, num_labels);
    terminal[x] = UniformIn(rng, 0.0, 1.0) < p_terminal;
  }
  return LabeledMdp(num_actions, std::move(rows), std::move(enabled),
                    std::move(labels), std::move(terminal));
}

LabeledMdp RandomChainMdp(Rand& rng, std::size_t num_states,
                          std::size_t num_labels) {
  std::vector<Distribution> rows;
  std::vector<std::vector<std::size_t>> enabled(num_states, {0});
  std::vector<std::size_t> labels(num_states);
  for (std::size_t x = 0; x < num_states; ++x) {
    rows.push_back(RandomDistribution(rng, num_states, num_states));
    labels[x] = IndexBelow(rng, num_labels);
  }
  return LabeledMdp(1, std::move(rows), std::move(enabled), std::move(labels),
                    StateMask(num_states, false));
}

StochasticGame RandomGame(Rand& rng, std::size_t num_states,
                          std::size_t num_def, std::size_t num_adv,
                          std::size_t num_props, std::size_t max_support) {
  std::vector<std::string> def, adv, props;
  for (std::size_t i = 0; i < num_def; ++i) def.push_back("d" + std::to_string(i));
  for (std::size_t i = 0; i < num_adv; ++i) adv.push_back("a" + std::to_string(i));
  for (std::size_t i = 0; i < num_props; ++i) props.push_back("p" + std::to_string(i));
  std::vector<std::size_t> labels(num_states);
  for (auto& l : labels) l = IndexBelow(rng, num_props);
  std::vector<Distribution> rows;
  for (std::size_t i = 0; i < num_states * num_def * num_adv; ++i) {
    rows.push_back(RandomDistribution(rng, num_states, max_support));
  }
  return StochasticGame(def, adv, props, labels, rows);
}

RabinAutomaton RandomAutomaton(Rand& rng, std::size_t num_states,
                               const std::vector<std::string>& alphabet) {
  std::vector<std::size_t> step(num_states * alphabet.size());
  for (auto& q : step) q = IndexBelow(rng, num_states);
  std::vector<RabinPair> pairs(1 + IndexBelow(rng, 2));
  for (RabinPair& p : pairs) {
    for (std::size_t q = 0; q < num_states; ++q) {
      const double u = UniformIn(rng, 0.0, 1.0);
      if (u < 0.25) {
        p.fin.push_back(q);
      } else if (u < 0.6) {
        p.inf.push_back(q);
      }
    }
    if (p.inf.empty()) p.inf.push_back(IndexBelow(rng, num_states));
    std::erase(p.fin, p.inf.front());
  }
  return RabinAutomaton(num_states, alphabet, step, 0, pairs);
}

DenseMatrix RandomMatrix(Rand& rng, std::size_t rows, std::size_t cols,
                         double lo, double hi) {
  DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = UniformIn(rng, lo, hi);
  }
  return m;
}

double GridMatrixGameValue(const DenseMatrix& a, double step) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m == 1) {
    double v = a(0, 0);
    for (std::size_t j = 1; j < n; ++j) v = std::min(v, a(0, j));
    return v;
  }
  const long ticks = std::lround(1.0 / step);
  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> base(n), slope(n), cand;
  // Mass r left for the last two rows, split t : r - t.
  auto line_search = [&](const std::vector<double>& partial, double r) {
    for (std::size_t j = 0; j < n; ++j) {
      base[j] = partial[j] + r * a(m - 1, j);
      slope[j] = a(m - 2, j) - a(m - 1, j);
    }
    cand.assign({0.0, r});
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const double ds = slope[j] - slope[k];
        if (ds == 0.0) continue;
        const double t = (base[k] - base[j]) / ds;
        if (t > 0.0 && t < r) cand.push_back(t);
      }
    }
    for (double t : cand) {
      double v = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < n; ++j) v = std::min(v, base[j] + t * slope[j]);
      best = std::max(best, v);
    }
  };
  // Grid over the first m - 2 rows.
  std::vector<long> k(m - 2, 0);
  std::vector<double> partial(n);
  std::function<void(std::size_t, long)> rec = [&](std::size_t row, long used) {
    if (row == m - 2) {
      std::fill(partial.begin(), partial.end(), 0.0);
      for (std::size_t i = 0; i < m - 2; ++i) {
        const double p = static_cast<double>(k[i]) / ticks;
        for (std::size_t j = 0; j < n; ++j) partial[j] += p * a(i, j);
      }
      line_search(partial, static_cast<double>(ticks - used) / ticks);
      return;
    }
    for (long v = 0; v + used <= ticks; ++v) {
      k[row] = v;
      rec(row + 1, used + v);
    }
  };
  rec(0, 0);
  return best;
}

bool SolveLinearSystem(std::vector<std::vector<double>> a,
                       std::vector<double> b, std::vector<double>* x) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    if (std::abs(a[piv][c]) < 1e-12) return false;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      if (f == 0.0) continue;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  x->resize(n);
  for (std::size_t i = 0; i < n; ++i) (*x)[i] = b[i] / a[i][i];
  return true;
}

VertexResult VertexEnumerate(const LinearProgram& lp, double tol) {
  const std::size_t n = lp.num_vars();
  struct Row {
    std::vector<double> a;
    double b;
    bool equality;
  };
  std::vector<Row> rows;
  for (const auto& c : lp.constraints()) {
    rows.push_back({c.coefficients, c.rhs, c.sense == ConstraintSense::kEqual});
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(lp.lower(j)) || !std::isfinite(lp.upper(j))) {
      throw std::invalid_argument("vertex enumeration needs finite bounds");
    }
    std::vector<double> e(n, 0.0);
    e[j] = 1.0;
    rows.push_back({e, lp.lower(j), false});
    rows.push_back({e, lp.upper(j), false});
  }
  VertexResult result;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == n) {
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].equality &&
            std::find(pick.begin(), pick.end(), r) == pick.end()) {
          return;
        }
      }
      std::vector<std::vector<double>> a;
      std::vector<double> b;
      for (std::size_t r : pick) {
        a.push_back(rows[r].a);
        b.push_back(rows[r].b);
      }
      std::vector<double> x;
      if (!SolveLinearSystem(a, b, &x)) return;
      if (lp.Violation(x) > tol) return;
      double v = 0.0;
      for (std::size_t j = 0; j < n; ++j) v += lp.objective()[j] * x[j];
      if (!result.feasible || v > result.value) {
        result = {true, v, x};
      }
      return;
    }
    for (std::size_t r = from; r < rows.size(); ++r) {
      pick.push_back(r);
      rec(r + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return result;
}

StateMask SubsetAcceptingStates(const ProductGame& product) {
  return SubsetAcceptingStates(product,
                               StateMask(product.num_states(), true));
}

StateMask SubsetAcceptingStates(const ProductGame& product,
                                const StateMask& candidates) {
  const std::size_t n = product.num_states();
  std::vector<std::size_t> pool;
  for (std::size_t x = 0; x < n; ++x) {
    if (candidates[x]) pool.push_back(x);
  }
  if (pool.size() > 16) throw std::invalid_argument("too many candidates");
  const std::size_t nd = product.num_def_actions();
  const std::size_t na = product.num_adv_actions();
  StateMask result(n, false);
  std::vector<bool> member(n, false);
  for (std::uint32_t set = 1; set < (1u << pool.size()); ++set) {
    std::fill(member.begin(), member.end(), false);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if ((set >> i) & 1u) member[pool[i]] = true;
    }
    auto in = [&](std::size_t x) { return member[x]; };
    // Closing actions and the edges they induce.
    std::vector<std::vector<std::size_t>> succ(n);
    bool closed = true;
    for (std::size_t x = 0; x < n && closed; ++x) {
      if (!in(x)) continue;
      bool any = false;
      for (std::size_t d = 0; d < nd; ++d) {
        bool stays = true;
        for (std::size_t a = 0; a < na && stays; ++a) {
          for (const Successor& e : product.transition(x, d, a)) {
            stays = stays && in(e.state);
          }
        }
        if (!stays) continue;
        any = true;
        for (std::size_t a = 0; a < na; ++a) {
          for (const Successor& e : product.transition(x, d, a)) {
            succ[x].push_back(e.state);
          }
        }
      }
      closed = any;
    }
    if (!closed) continue;
    // Strong connectivity: every member reaches every other one.
    bool connected = true;
    for (std::size_t x = 0; x < n && connected; ++x) {
      if (!in(x)) continue;
      std::vector<bool> seen(n, false);
      std::vector<std::size_t> stack{x};
      seen[x] = true;
      while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v : succ[u]) {
          if (!seen[v]) {
            seen[v] = true;
            stack.push_back(v);
          }
        }
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (in(y) && !seen[y]) connected = false;
      }
    }
    if (!connected) continue;
    for (std::size_t i = 0; i < product.num_pairs(); ++i) {
      bool hits_fin = false, hits_inf = false;
      for (std::size_t x = 0; x < n; ++x) {
        if (!in(x)) continue;
        hits_fin = hits_fin || product.InFin(i, x);
        hits_inf = hits_inf || product.InInf(i, x);
      }
      if (!hits_fin && hits_inf) {
        for (std::size_t x = 0; x < n; ++x) {
          if (in(x)) result[x] = true;
        }
      }
    }
  }
  return result;
}

std::vector<double> GridStackelbergValues(const ProductGame& product,
                                          const StateMask& target, double step,
                                          std::size_t sweeps) {
  if (product.num_def_actions() != 2) {
    throw std::invalid_argument("grid oracle needs two defender actions");
  }
  const std::size_t n = product.num_states();
  const std::size_t na = product.num_adv_actions();
  const long ticks = std::lround(1.0 / step);
  std::vector<double> v(n, 0.0), next(n, 0.0);
  for (std::size_t x = 0; x < n; ++x) v[x] = target[x] ? 1.0 : 0.0;
  std::vector<double> q0(na), q1(na);
  for (std::size_t it = 0; it < sweeps; ++it) {
    double change = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      if (target[x]) {
        next[x] = 1.0;
        continue;
      }
      for (std::size_t a = 0; a < na; ++a) {
        q0[a] = q1[a] = 0.0;
        for (const Successor& e : product.transition(x, 0, a)) {
          q0[a] += e.prob * v[e.state];
        }
        for (const Successor& e : product.transition(x, 1, a)) {
          q1[a] += e.prob * v[e.state];
        }
      }
      double best = 0.0;
      for (long k = 0; k <= ticks; ++k) {
        const double p = static_cast<double>(k) / ticks;
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < na; ++a) {
          worst = std::min(worst, p * q0[a] + (1.0 - p) * q1[a]);
        }
        best = std::max(best, worst);
      }
      next[x] = best;
      change = std::max(change, std::abs(best - v[x]));
    }
    v.swap(next);
    if (change < 1e-13) break;
  }
  return v;
}

std::vector<double> ReachUnderPolicies(const ProductGame& product,
                                       const MixedPolicy& mu,
                                       const std::vector<std::size_t>& adv,
                                       const StateMask& target) {
  const std::size_t n = product.num_states();
  std::vector<std::vector<double>> p(n, std::vector<double>(n, 0.0));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t d = 0; d < product.num_def_actions(); ++d) {
      for (const Successor& e : product.transition(x, d, adv[x])) {
        p[x][e.state] += mu(x, d) * e.prob;
      }
    }
  }
  // States that reach the target with positive probability.
  std::vector<bool> live(target.begin(), target.end());
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t x = 0; x < n; ++x) {
      if (live[x]) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (p[x][y] > 0.0 && live[y]) {
          live[x] = true;
          grew = true;
          break;
        }
      }
    }
  }
  std::vector<std::size_t> unknown;
  for (std::size_t x = 0; x < n; ++x) {
    if (live[x] && !target[x]) unknown.push_back(x);
  }
  std::vector<double> result(n, 0.0);
  for (std::size_t x = 0; x < n; ++x) result[x] = target[x] ? 1.0 : 0.0;
  if (unknown.empty()) return result;
  const std::size_t k = unknown.size();
  std::vector<std::vector<double>> a(k, std::vector<double>(k, 0.0));
  std::vector<double> b(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t x = unknown[i];
    a[i][i] = 1.0;
    for (std::size_t y = 0; y < n; ++y) {
      if (target[y]) b[i] += p[x][y];
    }
    for (std::size_t j = 0; j < k; ++j) a[i][j] -= p[x][unknown[j]];
  }
  std::vector<double> sol;
  if (!SolveLinearSystem(a, b, &sol)) {
    throw std::runtime_error("reachability system is singular");
  }
  for (std::size_t i = 0; i < k; ++i) result[unknown[i]] = sol[i];
  return result;
}

std::vector<double> WorstCaseReach(const ProductGame& product,
                                   const MixedPolicy& mu,
                                   const StateMask& target) {
  const std::size_t n = product.num_states();
  const std::size_t na = product.num_adv_actions();
  std::vector<double> worst(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> adv(n, 0);
  for (;;) {
    std::vector<double> r = ReachUnderPolicies(product, mu, adv, target);
    for (std::size_t x = 0; x < n; ++x) worst[x] = std::min(worst[x], r[x]);
    std::size_t i = 0;
    while (i < n && ++adv[i] == na) adv[i++] = 0;
    if (i == n) break;
  }
  return worst;
}

std::vector<double> GridRowByCases(const GridSpec& spec, std::size_t x,
                                   std::size_t y, std::size_t def,
                                   std::size_t adv) {
  const std::size_t m = spec.width;
  const std::size_t h = spec.height;
  const std::size_t i = x + m * y;
  std::vector<double> row(m * h, 0.0);
  const bool off_grid = (def == 0 && x + 1 == m) || (def == 1 && x == 0) ||
                        (def == 2 && y + 1 == h) || (def == 3 && y == 0);
  if (off_grid) {
    row[i] = 1.0;
    return row;
  }
  std::size_t intended = i;
  switch (def) {
    case 0: intended = i + 1; break;
    case 1: intended = i - 1; break;
    case 2: intended = i + m; break;
    default: intended = i - m; break;
  }
  std::vector<std::size_t> others = {i};
  if (x + 1 < m && i + 1 != intended) others.push_back(i + 1);
  if (x > 0 && i - 1 != intended) others.push_back(i - 1);
  if (y + 1 < h && i + m != intended) others.push_back(i + m);
  if (y > 0 && i - m != intended) others.push_back(i - m);
  const double p = adv == 0 ? spec.p_attack : spec.p_nominal;
  row[intended] = p;
  // |others| equals the number of in-grid neighbors.
  for (std::size_t j : others) row[j] += (1.0 - p) / others.size();
  return row;
}

double DenseKantorovichOneSided(const Distribution& omega,
                                const Distribution& omega_prime,
                                const DistanceTable& d, double alpha) {
  const std::size_t n = d.num_states();
  LinearProgram lp(n);
  for (std::size_t s = 0; s < n; ++s) {
    lp.SetObjectiveCoefficient(
        s, ProbabilityOf(omega, s) - alpha * ProbabilityOf(omega_prime, s));
    lp.SetBounds(s, 0.0, 1.0);
  }
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (s == t) continue;
      std::vector<double> row(n, 0.0);
      row[s] = 1.0;
      row[t] = -alpha;
      lp.AddConstraint(std::move(row), ConstraintSense::kLessEqual, d(s, t));
    }
  }
  LpSolution sol = Solve(lp);
  if (sol.status != LpStatus::kOptimal) {
    throw std::runtime_error("dense Kantorovich program did not solve");
  }
  return sol.value;
}

double DenseKantorovich(const Distribution& omega,
                        const Distribution& omega_prime, const DistanceTable& d,
                        double alpha) {
  return std::clamp(
      std::max(DenseKantorovichOneSided(omega, omega_prime, d, alpha),
               DenseKantorovichOneSided(omega_prime, omega, d, alpha)),
      0.0, 1.0);
}

DistanceTable DenseFtvStep(const DistanceTable& d, const LabeledMdp& mdp,
                           double alpha) {
  const std::size_t n = mdp.num_states();
  DistanceTable out(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      double v = 0.0;
      if (mdp.label(s) != mdp.label(t) || mdp.terminal(s) != mdp.terminal(t) ||
          mdp.enabled(s) != mdp.enabled(t)) {
        v = 1.0;
      } else {
        for (std::size_t a : mdp.enabled(s)) {
          v = std::max(v, DenseKantorovich(mdp.transition(s, a),
                                           mdp.transition(t, a), d, alpha));
        }
      }
      out.Set(s, t, v);
    }
  }
  return out;
}

std::vector<std::vector<double>> BellmanByRecursion(const LabeledMdp& mdp,
                                                    std::size_t n) {
  const std::size_t m = mdp.num_states();
  std::vector<std::vector<double>> v(n + 1, std::vector<double>(m, 0.0));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t x = 0; x < m; ++x) {
      if (mdp.terminal(x)) {
        v[k][x] = 1.0;
        continue;
      }
      double best = 0.0;
      for (std::size_t a : mdp.enabled(x)) {
        double sum = 0.0;
        for (const Successor& e : mdp.transition(x, a)) {
          sum += e.prob * v[k - 1][e.state];
        }
        best = std::max(best, sum);
      }
      v[k][x] = best;
    }
  }
  return v;
}

double PathEnumerationTvAlpha(const MarkovChain& chain, std::size_t s,
                              std::size_t t, double alpha, std::size_t h) {
  auto words = [&](std::size_t start) {
    std::map<std::vector<std::size_t>, double> out;
    std::vector<std::size_t> path{start};
    std::function<void(double)> rec = [&](double prob) {
      if (path.size() == h) {
        std::vector<std::size_t> word;
        for (std::size_t x : path) word.push_back(chain.label(x));
        out[word] += prob;
        return;
      }
      for (const Successor& e : chain.row(path.back())) {
        path.push_back(e.state);
        rec(prob * e.prob);
        path.pop_back();
      }
    };
    rec(1.0);
    return out;
  };
  auto from_s = words(s);
  auto from_t = words(t);
  auto side = [&](const auto& p, const auto& q) {
    double total = 0.0;
    for (const auto& [w, mass] : p) {
      auto it = q.find(w);
      const double other = it == q.end() ? 0.0 : it->second;
      total += std::max(mass - alpha * other, 0.0);
    }
    return total;
  };
  return std::max(side(from_s, from_t), side(from_t, from_s));
}

bool LassoSemantics(const LtlFormula& f, const LassoWord& word) {
  std::vector<std::string> letters = word.prefix;
  letters.insert(letters.end(), word.cycle.begin(), word.cycle.end());
  const std::size_t len = letters.size();
  const std::size_t loop = word.prefix.size();
  auto next = [&](std::size_t i) { return i + 1 < len ? i + 1 : loop; };
  std::function<bool(const LtlFormula&, std::size_t)> holds =
      [&](const LtlFormula& g, std::size_t i) -> bool {
    switch (g.op()) {
      case LtlOp::kTrue:
        return true;
      case LtlOp::kAtom:
        return letters[i] == g.atom();
      case LtlOp::kNot:
        return !holds(g.left(), i);
      case LtlOp::kAnd:
        return holds(g.left(), i) && holds(g.right(), i);
      case LtlOp::kNext:
        return holds(g.left(), next(i));
      case LtlOp::kUntil: {
        std::size_t j = i;
        for (std::size_t steps = 0; steps <= len; ++steps) {
          if (holds(g.right(), j)) return true;
          if (!holds(g.left(), j)) return false;
          j = next(j);
        }
        return false;
      }
    }
    return false;
  };
  return holds(f, 0);
}

bool AutomatonAcceptsByUnrolling(const RabinAutomaton& automaton,
                                 const std::vector<std::size_t>& prefix,
                                 const std::vector<std::size_t>& cycle) {
  const std::size_t nq = automaton.num_states();
  std::size_t q = automaton.initial();
  for (std::size_t l : prefix) q = automaton.Step(q, l);
  for (std::size_t pass = 0; pass <= nq; ++pass) {
    for (std::size_t l : cycle) q = automaton.Step(q, l);
  }
  std::vector<bool> seen(nq, false);
  for (std::size_t pass = 0; pass < nq; ++pass) {
    for (std::size_t l : cycle) {
      q = automaton.Step(q, l);
      seen[q] = true;
    }
  }
  for (std::size_t i = 0; i < automaton.pairs().size(); ++i) {
    bool fin = false, inf = false;
    for (std::size_t p = 0; p < nq; ++p) {
      if (!seen[p]) continue;
      fin = fin || automaton.InFin(i, p);
      inf = inf || automaton.InInf(i, p);
    }
    if (!fin && inf) return true;
  }
  return false;
}

std::vector<std::vector<std::string>> AllWords(
    const std::vector<std::string>& alphabet, std::size_t max_len) {
  std::vector<std::vector<std::string>> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (const std::string& l : alphabet) {
        auto w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

}  // namespace dpsynth::oracle
