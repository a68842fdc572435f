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

#include "dpsynth/rabin.h"

#include <algorithm>

#include "dpsynth/error.h"

namespace dpsynth {
namespace {

std::vector<bool> ToMask(std::vector<std::size_t>& states, std::size_t n,
                         std::size_t pair, const char* which) {
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  std::vector<bool> mask(n, false);
  for (std::size_t q : states) {
    if (q >= n) {
      throw ModelError("pair " + std::to_string(pair) + " " + which +
                       " set mentions undefined state " + std::to_string(q));
    }
    mask[q] = true;
  }
  return mask;
}

}  // namespace

RabinAutomaton::RabinAutomaton(std::size_t num_states,
                               std::vector<std::string> alphabet,
                               std::vector<std::size_t> step,
                               std::size_t initial,
                               std::vector<RabinPair> pairs)
    : num_states_(num_states),
      alphabet_(std::move(alphabet)),
      step_(std::move(step)),
      initial_(initial),
      pairs_(std::move(pairs)) {
  if (num_states_ == 0) throw ModelError("automaton has no states");
  if (alphabet_.empty()) throw ModelError("automaton has an empty alphabet");
  if (initial_ >= num_states_) {
    throw ModelError("initial state " + std::to_string(initial_) +
                     " is undefined");
  }
  if (step_.size() != num_states_ * alphabet_.size()) {
    throw ModelError("step function is not total over states x alphabet");
  }
  for (std::size_t q = 0; q < num_states_; ++q) {
    for (std::size_t l = 0; l < alphabet_.size(); ++l) {
      if (Step(q, l) >= num_states_) {
        throw ModelError("step(" + std::to_string(q) + ", " + alphabet_[l] +
                         ") leads to undefined state");
      }
    }
  }
  if (pairs_.empty()) throw ModelError("automaton has no acceptance pairs");
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    fin_mask_.push_back(ToMask(pairs_[i].fin, num_states_, i, "L"));
    inf_mask_.push_back(ToMask(pairs_[i].inf, num_states_, i, "K"));
  }
}

std::optional<std::size_t> RabinAutomaton::FindLetter(
    const std::string& name) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
  if (it == alphabet_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - alphabet_.begin());
}

bool RabinAutomaton::AcceptsLasso(const std::vector<std::size_t>& prefix,
                                  const std::vector<std::size_t>& cycle) const {
  if (cycle.empty()) throw ModelError("lasso cycle must be non-empty");
  std::size_t q = initial_;
  for (std::size_t letter : prefix) q = Step(q, letter);

  // The state at the start of each cycle pass is eventually periodic with
  // period at most |Q|; everything visited inside the period recurs forever.
  std::vector<std::size_t> first_pass(num_states_, num_states_);
  std::vector<std::size_t> starts;
  while (first_pass[q] == num_states_) {
    first_pass[q] = starts.size();
    starts.push_back(q);
    for (std::size_t letter : cycle) q = Step(q, letter);
  }
  std::vector<bool> recurring(num_states_, false);
  for (std::size_t pass = first_pass[q]; pass < starts.size(); ++pass) {
    std::size_t p = starts[pass];
    for (std::size_t letter : cycle) {
      p = Step(p, letter);
      recurring[p] = true;
    }
  }
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    bool hits_fin = false;
    bool hits_inf = false;
    for (std::size_t p = 0; p < num_states_; ++p) {
      if (!recurring[p]) continue;
      hits_fin = hits_fin || fin_mask_[i][p];
      hits_inf = hits_inf || inf_mask_[i][p];
    }
    if (!hits_fin && hits_inf) return true;
  }
  return false;
}

RabinAutomaton UniversalAutomaton(std::vector<std::string> alphabet) {
  std::vector<std::size_t> step(alphabet.size(), 0);
  return RabinAutomaton(1, std::move(alphabet), std::move(step), 0,
                        {RabinPair{{}, {0}}});
}

}  // namespace dpsynth
