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

#include "dpsynth/labeled_mdp.h"

#include <algorithm>
#include <string>

#include "dpsynth/error.h"

namespace dpsynth {

LabeledMdp::LabeledMdp(std::size_t num_actions, std::vector<Distribution> rows,
                       std::vector<std::vector<std::size_t>> enabled,
                       std::vector<std::size_t> labels, StateMask terminal)
    : num_actions_(num_actions),
      rows_(std::move(rows)),
      enabled_(std::move(enabled)),
      labels_(std::move(labels)),
      terminal_(std::move(terminal)) {
  const std::size_t n = labels_.size();
  if (rows_.size() != n * num_actions_ || enabled_.size() != n ||
      terminal_.size() != n) {
    throw ModelError("MDP dimensions are inconsistent");
  }
  for (std::size_t x = 0; x < n; ++x) {
    auto& en = enabled_[x];
    std::sort(en.begin(), en.end());
    en.erase(std::unique(en.begin(), en.end()), en.end());
    if (en.empty()) {
      throw ModelError("MDP state " + std::to_string(x) +
                       " has no enabled action");
    }
    for (std::size_t a : en) {
      if (a >= num_actions_) {
        throw ModelError("MDP state " + std::to_string(x) +
                         " enables an undefined action");
      }
      rows_[x * num_actions_ + a] = MakeDistribution(
          std::move(rows_[x * num_actions_ + a]), n,
          "MDP row (" + std::to_string(x) + ", " + std::to_string(a) + ")");
    }
  }
}

bool LabeledMdp::IsEnabled(std::size_t x, std::size_t a) const {
  return std::binary_search(enabled_[x].begin(), enabled_[x].end(), a);
}

LabeledMdp RestrictToPolicy(const ProductGame& product, const MixedPolicy& mu,
                            const MixedPolicy& tau, const AcceptingSet& e) {
  const std::size_t n = product.num_states();
  const std::size_t nd = product.num_def_actions();
  const std::size_t na = product.num_adv_actions();
  if (mu.num_states() != n || tau.num_states() != n) {
    throw ModelError("policy does not cover every product state");
  }
  std::vector<Distribution> rows(n * nd);
  std::vector<std::vector<std::size_t>> enabled(n);
  std::vector<double> dense(n, 0.0);
  std::vector<std::size_t> touched;
  for (std::size_t x = 0; x < n; ++x) {
    enabled[x] = mu.Support(x);
    for (std::size_t d : enabled[x]) {
      touched.clear();
      for (std::size_t a = 0; a < na; ++a) {
        if (tau(x, a) == 0.0) continue;
        for (const Successor& s : product.transition(x, d, a)) {
          if (dense[s.state] == 0.0) touched.push_back(s.state);
          dense[s.state] += tau(x, a) * s.prob;
        }
      }
      std::sort(touched.begin(), touched.end());
      for (std::size_t y : touched) {
        rows[x * nd + d].push_back({y, dense[y]});
        dense[y] = 0.0;
      }
    }
  }
  return LabeledMdp(nd, std::move(rows), std::move(enabled), product.labels(),
                    e.member);
}

SubMdp ReachableSubMdp(const LabeledMdp& mdp, std::size_t initial) {
  const std::size_t n = mdp.num_states();
  const std::size_t na = mdp.num_actions();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{initial};
  seen[initial] = true;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t a : mdp.enabled(x)) {
      for (const Successor& e : mdp.transition(x, a)) {
        if (!seen[e.state]) {
          seen[e.state] = true;
          stack.push_back(e.state);
        }
      }
    }
  }
  std::vector<std::size_t> original;
  std::vector<std::size_t> renumber(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (!seen[x]) continue;
    renumber[x] = original.size();
    original.push_back(x);
  }
  const std::size_t m = original.size();
  std::vector<Distribution> rows(m * na);
  std::vector<std::vector<std::size_t>> enabled(m);
  std::vector<std::size_t> labels(m);
  StateMask terminal(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t x = original[i];
    enabled[i] = mdp.enabled(x);
    labels[i] = mdp.label(x);
    terminal[i] = mdp.terminal(x);
    for (std::size_t a : enabled[i]) {
      for (const Successor& e : mdp.transition(x, a)) {
        rows[i * na + a].push_back({renumber[e.state], e.prob});
      }
    }
  }
  return {LabeledMdp(na, std::move(rows), std::move(enabled),
                     std::move(labels), std::move(terminal)),
          std::move(original)};
}

MarkovChain ChainFromMdp(const LabeledMdp& mdp, const MixedPolicy& policy) {
  const std::size_t n = mdp.num_states();
  if (policy.num_states() != n || policy.num_actions() != mdp.num_actions()) {
    throw ModelError("policy does not match the MDP");
  }
  std::vector<Distribution> rows(n);
  std::vector<double> dense(n, 0.0);
  std::vector<std::size_t> touched;
  for (std::size_t x = 0; x < n; ++x) {
    touched.clear();
    for (std::size_t a = 0; a < mdp.num_actions(); ++a) {
      double w = policy(x, a);
      if (w == 0.0) continue;
      if (!mdp.IsEnabled(x, a)) {
        throw ModelError("policy uses a disabled action at state " +
                         std::to_string(x));
      }
      for (const Successor& e : mdp.transition(x, a)) {
        if (dense[e.state] == 0.0) touched.push_back(e.state);
        dense[e.state] += w * e.prob;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::size_t y : touched) {
      rows[x].push_back({y, dense[y]});
      dense[y] = 0.0;
    }
  }
  return MarkovChain(std::move(rows), mdp.labels());
}

}  // namespace dpsynth
