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

#include "dpsynth/markov_chain.h"

#include <algorithm>
#include <string>

#include "dpsynth/error.h"

namespace dpsynth {

MarkovChain::MarkovChain(std::vector<Distribution> rows,
                         std::vector<std::size_t> labels)
    : rows_(std::move(rows)), labels_(std::move(labels)) {
  if (rows_.size() != labels_.size()) {
    throw ModelError("chain has " + std::to_string(rows_.size()) +
                     " rows but " + std::to_string(labels_.size()) +
                     " labels");
  }
  const std::size_t n = rows_.size();
  for (std::size_t s = 0; s < n; ++s) {
    rows_[s] = MakeDistribution(std::move(rows_[s]), n,
                                "chain row " + std::to_string(s));
    num_labels_ = std::max(num_labels_, labels_[s] + 1);
  }
}

MarkovChain InduceChain(const ProductGame& product, const MixedPolicy& mu,
                        const MixedPolicy& tau) {
  const std::size_t n = product.num_states();
  const std::size_t nd = product.num_def_actions();
  const std::size_t na = product.num_adv_actions();
  if (mu.num_actions() != nd || tau.num_actions() != na) {
    throw ModelError("policy action count does not match the game");
  }
  if (mu.num_states() < n || tau.num_states() < n) {
    std::size_t missing = std::min(mu.num_states(), tau.num_states());
    throw ModelError("policy is undefined at product state " +
                     std::to_string(missing));
  }
  std::vector<Distribution> rows(n);
  std::vector<double> dense(n, 0.0);
  std::vector<std::size_t> touched;
  for (std::size_t x = 0; x < n; ++x) {
    touched.clear();
    for (std::size_t d = 0; d < nd; ++d) {
      if (mu(x, d) == 0.0) continue;
      for (std::size_t a = 0; a < na; ++a) {
        double w = mu(x, d) * tau(x, a);
        if (w == 0.0) continue;
        for (const Successor& e : product.transition(x, d, a)) {
          if (dense[e.state] == 0.0) touched.push_back(e.state);
          dense[e.state] += w * e.prob;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::size_t y : touched) {
      rows[x].push_back({y, dense[y]});
      dense[y] = 0.0;
    }
  }
  return MarkovChain(std::move(rows), product.labels());
}

namespace {

// Iterative Tarjan over the positive-probability edge graph. Calls `emit`
// with each strongly connected component.
template <typename Successors, typename Emit>
void Tarjan(std::size_t n, const Successors& successors, Emit emit) {
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  std::vector<Frame> call;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& succ = successors(f.v);
      if (f.next < succ.size()) {
        std::size_t w = succ[f.next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) {
        low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> component;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        emit(std::move(component));
      }
    }
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> StronglyConnectedComponents(
    const std::vector<std::vector<std::size_t>>& adjacency) {
  std::vector<std::vector<std::size_t>> out;
  Tarjan(
      adjacency.size(),
      [&](std::size_t v) -> const std::vector<std::size_t>& {
        return adjacency[v];
      },
      [&](std::vector<std::size_t> c) { out.push_back(std::move(c)); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CommunicatingClass> ClassifyStates(const MarkovChain& chain) {
  const std::size_t n = chain.num_states();
  std::vector<std::vector<std::size_t>> adjacency(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (const Successor& e : chain.row(s)) adjacency[s].push_back(e.state);
  }
  std::vector<std::size_t> component_of(n);
  auto components = StronglyConnectedComponents(adjacency);
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (std::size_t s : components[c]) component_of[s] = c;
  }
  std::vector<CommunicatingClass> out;
  for (std::size_t c = 0; c < components.size(); ++c) {
    bool closed = true;
    for (std::size_t s : components[c]) {
      for (std::size_t t : adjacency[s]) closed = closed && component_of[t] == c;
    }
    out.push_back({std::move(components[c]), closed});
  }
  return out;
}

double PathMeasure(const MarkovChain& chain,
                   std::span<const std::size_t> path) {
  if (path.empty()) throw ModelError("path must be non-empty");
  double p = 1.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    p *= chain.probability(path[i], path[i + 1]);
  }
  return p;
}

double WordMeasure(const MarkovChain& chain, std::size_t start,
                   std::span<const std::size_t> word) {
  if (word.empty()) throw ModelError("word must be non-empty");
  if (chain.label(start) != word[0]) return 0.0;
  const std::size_t n = chain.num_states();
  std::vector<double> mass(n, 0.0), next(n, 0.0);
  mass[start] = 1.0;
  for (std::size_t i = 1; i < word.size(); ++i) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t s = 0; s < n; ++s) {
      if (mass[s] == 0.0) continue;
      for (const Successor& e : chain.row(s)) {
        if (chain.label(e.state) == word[i]) next[e.state] += mass[s] * e.prob;
      }
    }
    mass.swap(next);
  }
  double total = 0.0;
  for (double m : mass) total += m;
  return total;
}

}  // namespace dpsynth
