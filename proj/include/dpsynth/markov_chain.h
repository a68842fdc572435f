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

#ifndef DPSYNTH_MARKOV_CHAIN_H_
#define DPSYNTH_MARKOV_CHAIN_H_

#include <cstddef>
#include <span>
#include <vector>

#include "dpsynth/game.h"
#include "dpsynth/policy.h"
#include "dpsynth/product.h"

namespace dpsynth {

// Labeled discrete-time Markov chain with one label per state.
class MarkovChain {
 public:
  // Throws ModelError if a row is not a distribution or the label vector
  // does not match the number of rows.
  MarkovChain(std::vector<Distribution> rows, std::vector<std::size_t> labels);

  std::size_t num_states() const { return rows_.size(); }
  const Distribution& row(std::size_t s) const { return rows_[s]; }
  double probability(std::size_t s, std::size_t t) const {
    return ProbabilityOf(rows_[s], t);
  }
  std::size_t label(std::size_t s) const { return labels_[s]; }
  const std::vector<std::size_t>& labels() const { return labels_; }
  // One past the largest label index.
  std::size_t num_labels() const { return num_labels_; }

 private:
  std::vector<Distribution> rows_;
  std::vector<std::size_t> labels_;
  std::size_t num_labels_ = 0;
};

// P(x'|x) = sum_{d,a} mu(d|x) tau(a|x) T(x'|x,d,a). Throws ModelError naming
// the first product state the policies do not cover.
MarkovChain InduceChain(const ProductGame& product, const MixedPolicy& mu,
                        const MixedPolicy& tau);

struct CommunicatingClass {
  std::vector<std::size_t> states;  // increasing
  bool recurrent = false;           // closed class
};

// Strongly connected components of a directed graph given by adjacency
// lists. Each component is sorted; components are ordered by first element.
std::vector<std::vector<std::size_t>> StronglyConnectedComponents(
    const std::vector<std::vector<std::size_t>>& adjacency);

// Communicating classes ordered by their smallest state. In a finite chain a
// class is positive recurrent iff no probability leaves it.
std::vector<CommunicatingClass> ClassifyStates(const MarkovChain& chain);

// Product of one-step probabilities along `path`; 1 for a single state.
double PathMeasure(const MarkovChain& chain, std::span<const std::size_t> path);

// Probability that a run from `start` emits `word` as its first |word|
// labels (the cylinder measure of the label sequence).
double WordMeasure(const MarkovChain& chain, std::size_t start,
                   std::span<const std::size_t> word);

}  // namespace dpsynth

#endif  // DPSYNTH_MARKOV_CHAIN_H_
