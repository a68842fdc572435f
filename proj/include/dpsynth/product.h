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

#ifndef DPSYNTH_PRODUCT_H_
#define DPSYNTH_PRODUCT_H_

#include <cstddef>
#include <string>
#include <vector>

#include "dpsynth/game.h"
#include "dpsynth/rabin.h"

namespace dpsynth {

// Membership mask over the states of a product game (or any indexed model).
using StateMask = std::vector<bool>;

// Synchronized composition of a stochastic game with a Rabin automaton.
// Product state x encodes (s, q) as x = s * |Q| + q. The automaton reads the
// label of the state being entered: T((s',q') | (s,q), d, a) = T(s' | s, d, a)
// when q' = step(q, label(s')) and zero otherwise.
class ProductGame {
 public:
  ProductGame(const StochasticGame& game, const RabinAutomaton& automaton);

  std::size_t num_states() const { return labels_.size(); }
  std::size_t num_game_states() const { return num_game_states_; }
  std::size_t num_aut_states() const { return num_aut_states_; }
  std::size_t num_def_actions() const { return def_actions_.size(); }
  std::size_t num_adv_actions() const { return adv_actions_.size(); }
  std::size_t num_pairs() const { return fin_.size(); }

  const std::vector<std::string>& def_actions() const { return def_actions_; }
  const std::vector<std::string>& adv_actions() const { return adv_actions_; }
  const std::vector<std::string>& props() const { return props_; }

  std::size_t Index(std::size_t s, std::size_t q) const {
    return s * num_aut_states_ + q;
  }
  std::size_t game_state(std::size_t x) const { return x / num_aut_states_; }
  std::size_t aut_state(std::size_t x) const { return x % num_aut_states_; }

  // Label of the underlying game state, as an index into props().
  std::size_t label(std::size_t x) const { return labels_[x]; }
  const std::vector<std::size_t>& labels() const { return labels_; }

  const Distribution& transition(std::size_t x, std::size_t def_action,
                                 std::size_t adv_action) const {
    return rows_[(x * def_actions_.size() + def_action) * adv_actions_.size() +
                 adv_action];
  }

  // Lifted Rabin pairs: (s,q) is in L(i) iff q is, likewise for K(i).
  bool InFin(std::size_t pair, std::size_t x) const { return fin_[pair][x]; }
  bool InInf(std::size_t pair, std::size_t x) const { return inf_[pair][x]; }

  // Product state in which a play starting from game state s begins: the
  // automaton has already consumed label(s).
  std::size_t InitialState(std::size_t s) const {
    return Index(s, initial_steps_[s]);
  }

 private:
  std::size_t num_game_states_;
  std::size_t num_aut_states_;
  std::vector<std::string> def_actions_;
  std::vector<std::string> adv_actions_;
  std::vector<std::string> props_;
  std::vector<std::size_t> labels_;
  std::vector<Distribution> rows_;
  std::vector<StateMask> fin_;
  std::vector<StateMask> inf_;
  std::vector<std::size_t> initial_steps_;
};

// Throws ModelError naming the first game label missing from the automaton
// alphabet.
ProductGame BuildProduct(const StochasticGame& game,
                         const RabinAutomaton& automaton);

}  // namespace dpsynth

#endif  // DPSYNTH_PRODUCT_H_
