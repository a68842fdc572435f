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

#ifndef DPSYNTH_RABIN_H_
#define DPSYNTH_RABIN_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dpsynth {

// One Rabin acceptance pair. A run is accepted by the pair when it visits
// `fin` finitely often and `inf` infinitely often. Both are sorted state
// lists.
struct RabinPair {
  std::vector<std::size_t> fin;
  std::vector<std::size_t> inf;

  friend bool operator==(const RabinPair&, const RabinPair&) = default;
};

// Deterministic Rabin automaton over a single-letter alphabet: each letter is
// one atomic proposition, matching the one-label-per-state convention of the
// games.
class RabinAutomaton {
 public:
  // `step` is indexed by q * |alphabet| + letter. Throws ModelError unless
  // the step function is total and in range, the pair list is non-empty and
  // every pair only mentions existing states.
  RabinAutomaton(std::size_t num_states, std::vector<std::string> alphabet,
                 std::vector<std::size_t> step, std::size_t initial,
                 std::vector<RabinPair> pairs);

  std::size_t num_states() const { return num_states_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  std::size_t initial() const { return initial_; }
  const std::vector<RabinPair>& pairs() const { return pairs_; }

  std::size_t Step(std::size_t q, std::size_t letter) const {
    return step_[q * alphabet_.size() + letter];
  }
  std::optional<std::size_t> FindLetter(const std::string& name) const;

  bool InFin(std::size_t pair, std::size_t q) const {
    return fin_mask_[pair][q];
  }
  bool InInf(std::size_t pair, std::size_t q) const {
    return inf_mask_[pair][q];
  }

  // Runs the automaton on a lasso word (letters given as alphabet indices)
  // and applies the Rabin condition to the states visited infinitely often.
  bool AcceptsLasso(const std::vector<std::size_t>& prefix,
                    const std::vector<std::size_t>& cycle) const;

  friend bool operator==(const RabinAutomaton& a, const RabinAutomaton& b) {
    return a.num_states_ == b.num_states_ && a.alphabet_ == b.alphabet_ &&
           a.step_ == b.step_ && a.initial_ == b.initial_ &&
           a.pairs_ == b.pairs_;
  }

 private:
  std::size_t num_states_;
  std::vector<std::string> alphabet_;
  std::vector<std::size_t> step_;
  std::size_t initial_;
  std::vector<RabinPair> pairs_;
  std::vector<std::vector<bool>> fin_mask_;
  std::vector<std::vector<bool>> inf_mask_;
};

// One-state automaton accepting every word: pair ({}, {q0}).
RabinAutomaton UniversalAutomaton(std::vector<std::string> alphabet);

}  // namespace dpsynth

#endif  // DPSYNTH_RABIN_H_
