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

#include "dpsynth/privacy.h"

#include <algorithm>
#include <cmath>

#include "dpsynth/error.h"
#include "dpsynth/synthesis.h"
#include "kantorovich_internal.h"

namespace dpsynth {
namespace {

void CheckAlpha(double alpha) {
  if (!(alpha >= 1.0) || !std::isfinite(alpha)) {
    throw ParameterError("alpha must be a finite number >= 1");
  }
}

bool Distinguishable(const LabeledMdp& mdp, std::size_t s, std::size_t t) {
  return mdp.label(s) != mdp.label(t) || mdp.terminal(s) != mdp.terminal(t);
}

// Upper bound of the one-sided program from the unit box alone.
double BoxBound(const Distribution& p, const Distribution& q, double alpha) {
  double bound = 0.0;
  for (const Successor& e : p) {
    bound += std::max(e.prob - alpha * ProbabilityOf(q, e.state), 0.0);
  }
  return bound;
}

// max(floor, F(d)(s,t)) for a pair that is not immediately distinguishable.
// Appends the states whose mutual distances the value depends on to `deps`
// when given. Programs that cannot beat `floor` are skipped.
double PairValue(const DistanceTable& d, const LabeledMdp& mdp, std::size_t s,
                 std::size_t t, double alpha, double floor,
                 std::vector<std::size_t>* deps,
                 const internal::KantorovichContext* context) {
  const auto& as = mdp.enabled(s);
  const auto& at = mdp.enabled(t);
  if (as != at) return 1.0;
  double worst = floor;
  for (std::size_t a : as) {
    const Distribution& p = mdp.transition(s, a);
    const Distribution& q = mdp.transition(t, a);
    for (int side = 0; side < 2; ++side) {
      const Distribution& from = side == 0 ? p : q;
      const Distribution& to = side == 0 ? q : p;
      if (BoxBound(from, to, alpha) <= worst) continue;
      internal::KantorovichResult r =
          internal::SolveKantorovich(from, to, d, alpha, context);
      worst = std::max(worst, r.value);
      if (deps) deps->insert(deps->end(), r.active.begin(), r.active.end());
    }
    if (worst >= 1.0) break;
  }
  return std::clamp(worst, 0.0, 1.0);
}

}  // namespace

DistanceTable BaseDistance(const LabeledMdp& mdp) {
  const std::size_t n = mdp.num_states();
  DistanceTable d(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (Distinguishable(mdp, s, t)) d.Set(s, t, 1.0);
    }
  }
  return d;
}

DistanceTable FtvStep(const DistanceTable& d, const LabeledMdp& mdp,
                      double alpha) {
  CheckAlpha(alpha);
  const std::size_t n = mdp.num_states();
  if (d.num_states() != n) throw ModelError("distance table size mismatch");
  DistanceTable out(n);
  const auto context = internal::MakeKantorovichContext(d, alpha);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      out.Set(s, t, Distinguishable(mdp, s, t)
                        ? 1.0
                        : PairValue(d, mdp, s, t, alpha, 0.0, nullptr,
                                    &context));
    }
  }
  return out;
}

FixpointResult FtvFixpoint(const LabeledMdp& mdp, double alpha,
                           const FixpointOptions& options) {
  CheckAlpha(alpha);
  if (!(options.tol > 0.0)) throw ParameterError("tolerance must be positive");
  const std::size_t n = mdp.num_states();
  FixpointResult result;
  DistanceTable d = BaseDistance(mdp);
  // A pair is recomputed only if a distance among the states its last value
  // depended on changed in the previous sweep; distances only grow, so the
  // skipped value would come out the same.
  std::vector<char> changed(n * n, 1);
  std::vector<std::vector<std::size_t>> deps(n * n);
  std::vector<std::size_t> scratch;
  for (std::size_t it = 0; it < options.max_iter; ++it) {
    const auto context = internal::MakeKantorovichContext(d, alpha);
    DistanceTable next = d;
    double change = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = s + 1; t < n; ++t) {
        if (d(s, t) >= 1.0 || Distinguishable(mdp, s, t)) continue;
        auto& dep = deps[s * n + t];
        bool dirty = it == 0;
        for (std::size_t i = 0; i < dep.size() && !dirty; ++i) {
          for (std::size_t j = i + 1; j < dep.size(); ++j) {
            if (changed[dep[i] * n + dep[j]]) {
              dirty = true;
              break;
            }
          }
        }
        if (!dirty) continue;
        scratch.clear();
        const double v =
            PairValue(d, mdp, s, t, alpha, d(s, t), &scratch, &context);
        std::sort(scratch.begin(), scratch.end());
        scratch.erase(std::unique(scratch.begin(), scratch.end()),
                      scratch.end());
        dep = scratch;
        next.Set(s, t, v);
        change = std::max(change, v - d(s, t));
      }
    }
    for (std::size_t i = 0; i < n * n; ++i) {
      changed[i] = next.data()[i] != d.data()[i];
    }
    d = std::move(next);
    result.iterations = it + 1;
    if (change < options.tol) {
      result.converged = true;
      break;
    }
  }
  result.distances = std::move(d);
  return result;
}

ValueGapReport ValueGapCheck(const LabeledMdp& mdp, double alpha,
                             std::size_t n) {
  CheckAlpha(alpha);
  const std::size_t m = mdp.num_states();
  std::vector<std::vector<double>> values = BellmanIterates(mdp, n);
  DistanceTable d = BaseDistance(mdp);
  ValueGapReport report;
  report.max_violation = -1.0 - alpha;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) d = FtvStep(d, mdp, alpha);
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t t = 0; t < m; ++t) {
        double gap = DeltaAlpha(values[k][s], values[k][t], alpha) - d(s, t);
        if (gap > report.max_violation) {
          report = {gap, k, s, t};
        }
      }
    }
  }
  return report;
}

double EmpiricalTvAlpha(const MarkovChain& chain, std::size_t s, std::size_t t,
                        double alpha, std::size_t horizon,
                        std::size_t max_horizon) {
  CheckAlpha(alpha);
  if (horizon == 0 || horizon > max_horizon) {
    throw ParameterError("horizon must be in [1, " +
                         std::to_string(max_horizon) + "]");
  }
  const std::size_t n = chain.num_states();
  const std::size_t num_labels = chain.num_labels();
  double forward = 0.0;
  double backward = 0.0;

  // Depth-first over label words, carrying the sub-probability vectors of
  // the paths from s and from t that emit the word so far.
  struct Frame {
    std::vector<double> from_s;
    std::vector<double> from_t;
    std::size_t length;
  };
  std::vector<Frame> stack;
  for (std::size_t l = 0; l < num_labels; ++l) {
    Frame f{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), 1};
    if (chain.label(s) == l) f.from_s[s] = 1.0;
    if (chain.label(t) == l) f.from_t[t] = 1.0;
    if (chain.label(s) == l || chain.label(t) == l) stack.push_back(std::move(f));
  }
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.length == horizon) {
      double ps = 0.0, pt = 0.0;
      for (std::size_t x = 0; x < n; ++x) {
        ps += f.from_s[x];
        pt += f.from_t[x];
      }
      forward += std::max(ps - alpha * pt, 0.0);
      backward += std::max(pt - alpha * ps, 0.0);
      continue;
    }
    std::vector<std::vector<double>> next_s(num_labels,
                                            std::vector<double>(n, 0.0));
    std::vector<std::vector<double>> next_t = next_s;
    std::vector<bool> reached(num_labels, false);
    for (std::size_t x = 0; x < n; ++x) {
      if (f.from_s[x] == 0.0 && f.from_t[x] == 0.0) continue;
      for (const Successor& e : chain.row(x)) {
        const std::size_t l = chain.label(e.state);
        next_s[l][e.state] += f.from_s[x] * e.prob;
        next_t[l][e.state] += f.from_t[x] * e.prob;
        reached[l] = true;
      }
    }
    for (std::size_t l = num_labels; l-- > 0;) {
      if (!reached[l]) continue;
      stack.push_back({std::move(next_s[l]), std::move(next_t[l]),
                       f.length + 1});
    }
  }
  return std::max(forward, backward);
}

}  // namespace dpsynth
