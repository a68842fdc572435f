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

#include "dpsynth/relation.h"

#include <algorithm>
#include <cmath>

#include "dpsynth/error.h"

namespace dpsynth {

Relation::Relation(std::size_t num_states, std::vector<Pair> pairs,
                   double alpha, double m)
    : n_(num_states),
      pairs_(std::move(pairs)),
      member_(num_states * num_states, false),
      alpha_(alpha),
      m_(m) {
  for (Pair& p : pairs_) {
    if (p.s > p.t) std::swap(p.s, p.t);
    if (p.t >= n_) throw ModelError("relation mentions an unknown state");
  }
  std::sort(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
    return std::make_pair(a.s, a.t) < std::make_pair(b.s, b.t);
  });
  for (const Pair& p : pairs_) {
    member_[p.s * n_ + p.t] = member_[p.t * n_ + p.s] = true;
  }
}

std::size_t Relation::num_off_diagonal() const {
  return static_cast<std::size_t>(std::count_if(
      pairs_.begin(), pairs_.end(), [](const Pair& p) { return p.s != p.t; }));
}

Relation BuildRelation(const LabeledMdp& mdp, const MixedPolicy& mu,
                       const DistanceTable& distances,
                       const RelationOptions& options) {
  const std::size_t n = mdp.num_states();
  if (mu.num_states() != n || distances.num_states() != n) {
    throw ModelError("policy or distance table does not match the MDP");
  }
  if (!(options.alpha >= 1.0)) throw ParameterError("alpha must be >= 1");
  if (!(options.m >= 0.0) || !(options.term_tol >= 0.0)) {
    throw ParameterError("M and term_tol must be non-negative");
  }

  std::vector<std::vector<std::size_t>> successors(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t a : mdp.enabled(x)) {
      for (const Successor& e : mdp.transition(x, a)) {
        successors[x].push_back(e.state);
      }
    }
    std::sort(successors[x].begin(), successors[x].end());
    successors[x].erase(
        std::unique(successors[x].begin(), successors[x].end()),
        successors[x].end());
  }

  std::vector<bool> in(n * n, false);
  std::vector<std::pair<std::size_t, std::size_t>> live;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s; t < n; ++t) {
      if (mdp.label(s) != mdp.label(t)) continue;
      if (mdp.terminal(s) != mdp.terminal(t)) continue;
      if (mu.TotalVariation(s, t) > options.m) continue;
      const double dist = distances(s, t);
      if (dist > options.budget) continue;
      if (mdp.terminal(s) && dist > options.term_tol) continue;
      in[s * n + t] = in[t * n + s] = true;
      live.push_back({s, t});
    }
  }

  // Drop non-terminal pairs without a related successor pair until stable.
  for (bool removed = true; removed;) {
    removed = false;
    std::vector<std::pair<std::size_t, std::size_t>> kept;
    for (auto [s, t] : live) {
      bool witnessed = mdp.terminal(s);
      for (std::size_t u : successors[s]) {
        if (witnessed) break;
        for (std::size_t v : successors[t]) {
          if (in[u * n + v]) {
            witnessed = true;
            break;
          }
        }
      }
      if (witnessed) {
        kept.push_back({s, t});
      } else {
        in[s * n + t] = in[t * n + s] = false;
        removed = true;
      }
    }
    live.swap(kept);
  }

  std::vector<Relation::Pair> pairs;
  for (auto [s, t] : live) pairs.push_back({s, t, distances(s, t)});
  return Relation(n, std::move(pairs), options.alpha, options.m);
}

DpCertificate MakeDpCertificate(const Relation& relation) {
  DpCertificate cert;
  cert.alpha = relation.alpha();
  cert.epsilon = std::log(relation.alpha());
  cert.m = relation.m();
  cert.pairs = relation.pairs().size();
  cert.off_diagonal_pairs = relation.num_off_diagonal();
  if (relation.pairs().empty()) return cert;
  double worst = 0.0;
  for (const auto& p : relation.pairs()) worst = std::max(worst, p.distance);
  cert.defined = true;
  cert.delta_min = relation.alpha() * relation.m() + worst;
  return cert;
}

TrajectoryCount CountDpTrajectories(const MarkovChain& chain,
                                    const std::vector<std::size_t>& reference,
                                    const Relation& relation,
                                    std::uint64_t budget) {
  const std::size_t n = chain.num_states();
  if (relation.num_states() != n) {
    throw ModelError("relation does not match the chain");
  }
  if (reference.empty()) throw ModelError("reference trajectory is empty");
  for (std::size_t x : reference) {
    if (x >= n) throw ModelError("reference trajectory leaves the chain");
  }
  if (PathMeasure(chain, reference) <= 0.0) {
    throw ModelError("reference trajectory has probability zero");
  }

  TrajectoryCount result;
  auto add = [&](std::uint64_t a, std::uint64_t b) {
    if (a > budget - std::min(b, budget)) {
      result.truncated = true;
      return budget;
    }
    return a + b;
  };
  // paths[x]: related prefixes ending in x, capped at the budget.
  std::vector<std::uint64_t> paths(n, 0), next(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (relation.Contains(reference[0], x)) paths[x] = 1;
  }
  for (std::size_t i = 1; i < reference.size(); ++i) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t x = 0; x < n; ++x) {
      if (paths[x] == 0) continue;
      for (const Successor& e : chain.row(x)) {
        if (relation.Contains(reference[i], e.state)) {
          next[e.state] = add(next[e.state], paths[x]);
        }
      }
    }
    paths.swap(next);
  }
  for (std::uint64_t c : paths) result.count = add(result.count, c);
  return result;
}

}  // namespace dpsynth
