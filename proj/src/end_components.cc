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

#include "dpsynth/end_components.h"

#include <algorithm>

#include "dpsynth/markov_chain.h"

namespace dpsynth {
namespace {

constexpr std::size_t kRemoved = static_cast<std::size_t>(-1);

// Refines `component` (kRemoved outside the candidate set) until every state
// has a closing action within its own component and every component is
// strongly connected under closing actions. Returns the closing actions.
std::vector<std::vector<std::size_t>> Refine(
    const ProductGame& product, std::vector<std::size_t>& component) {
  const std::size_t n = product.num_states();
  const std::size_t nd = product.num_def_actions();
  const std::size_t na = product.num_adv_actions();
  std::vector<std::vector<std::size_t>> allowed(n);

  auto stays = [&](std::size_t x, std::size_t d) {
    for (std::size_t a = 0; a < na; ++a) {
      for (const Successor& e : product.transition(x, d, a)) {
        if (component[e.state] != component[x]) return false;
      }
    }
    return true;
  };

  for (;;) {
    bool removed = false;
    for (std::size_t x = 0; x < n; ++x) {
      allowed[x].clear();
      if (component[x] == kRemoved) continue;
      for (std::size_t d = 0; d < nd; ++d) {
        if (stays(x, d)) allowed[x].push_back(d);
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (component[x] != kRemoved && allowed[x].empty()) {
        component[x] = kRemoved;
        removed = true;
      }
    }
    if (removed) continue;

    std::vector<std::vector<std::size_t>> adjacency(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t d : allowed[x]) {
        for (std::size_t a = 0; a < na; ++a) {
          for (const Successor& e : product.transition(x, d, a)) {
            adjacency[x].push_back(e.state);
          }
        }
      }
      std::sort(adjacency[x].begin(), adjacency[x].end());
      adjacency[x].erase(std::unique(adjacency[x].begin(), adjacency[x].end()),
                         adjacency[x].end());
    }
    std::vector<std::size_t> old_labels;
    for (std::size_t x = 0; x < n; ++x) {
      if (component[x] != kRemoved) old_labels.push_back(component[x]);
    }
    std::sort(old_labels.begin(), old_labels.end());
    std::size_t old_count = static_cast<std::size_t>(
        std::unique(old_labels.begin(), old_labels.end()) - old_labels.begin());
    std::size_t count = 0;
    for (const auto& scc : StronglyConnectedComponents(adjacency)) {
      if (component[scc.front()] == kRemoved) continue;
      for (std::size_t x : scc) component[x] = count;
      ++count;
    }
    // Closing edges never cross components, so SCCs refine the partition and
    // an unchanged count means nothing split.
    if (count == old_count) return allowed;
  }
}

}  // namespace

std::size_t AcceptingSet::size() const {
  return static_cast<std::size_t>(
      std::count(member.begin(), member.end(), true));
}

std::vector<std::size_t> AcceptingSet::States() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < member.size(); ++x) {
    if (member[x]) out.push_back(x);
  }
  return out;
}

AcceptingSet AcceptingStates(const ProductGame& product) {
  const std::size_t n = product.num_states();
  AcceptingSet result{StateMask(n, false),
                      std::vector<std::vector<std::size_t>>(n)};
  for (std::size_t i = 0; i < product.num_pairs(); ++i) {
    std::vector<std::size_t> component(n, kRemoved);
    for (std::size_t x = 0; x < n; ++x) {
      if (!product.InFin(i, x)) component[x] = 0;
    }
    auto allowed = Refine(product, component);

    std::vector<bool> meets_inf;
    for (std::size_t x = 0; x < n; ++x) {
      if (component[x] == kRemoved) continue;
      if (component[x] >= meets_inf.size()) {
        meets_inf.resize(component[x] + 1, false);
      }
      if (product.InInf(i, x)) meets_inf[component[x]] = true;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (component[x] == kRemoved || !meets_inf[component[x]]) continue;
      result.member[x] = true;
      auto& stay = result.stay_actions[x];
      stay.insert(stay.end(), allowed[x].begin(), allowed[x].end());
      std::sort(stay.begin(), stay.end());
      stay.erase(std::unique(stay.begin(), stay.end()), stay.end());
    }
  }
  return result;
}

}  // namespace dpsynth
