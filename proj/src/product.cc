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

#include "dpsynth/product.h"

#include "dpsynth/error.h"

namespace dpsynth {

ProductGame::ProductGame(const StochasticGame& game,
                         const RabinAutomaton& automaton)
    : num_game_states_(game.num_states()),
      num_aut_states_(automaton.num_states()),
      def_actions_(game.def_actions()),
      adv_actions_(game.adv_actions()),
      props_(game.props()) {
  // Translate game labels to automaton letters once.
  std::vector<std::size_t> letter_of_prop(props_.size());
  for (std::size_t p = 0; p < props_.size(); ++p) {
    auto letter = automaton.FindLetter(props_[p]);
    bool used = false;
    for (std::size_t s = 0; s < game.num_states() && !used; ++s) {
      used = game.label(s) == p;
    }
    if (!letter) {
      if (used) {
        throw ModelError("label '" + props_[p] +
                         "' is not in the automaton alphabet");
      }
      continue;
    }
    letter_of_prop[p] = *letter;
  }

  const std::size_t nq = num_aut_states_;
  const std::size_t n = num_game_states_ * nq;
  labels_.resize(n);
  for (std::size_t x = 0; x < n; ++x) labels_[x] = game.label(x / nq);

  initial_steps_.resize(num_game_states_);
  for (std::size_t s = 0; s < num_game_states_; ++s) {
    initial_steps_[s] =
        automaton.Step(automaton.initial(), letter_of_prop[game.label(s)]);
  }

  const std::size_t nd = def_actions_.size();
  const std::size_t na = adv_actions_.size();
  rows_.resize(n * nd * na);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t s = x / nq;
    const std::size_t q = x % nq;
    for (std::size_t d = 0; d < nd; ++d) {
      for (std::size_t a = 0; a < na; ++a) {
        Distribution& row = rows_[(x * nd + d) * na + a];
        for (const Successor& e : game.transition(s, d, a)) {
          std::size_t q_next =
              automaton.Step(q, letter_of_prop[game.label(e.state)]);
          row.push_back({Index(e.state, q_next), e.prob});
        }
        // Successor game states are sorted and q' is a function of s', so
        // the lifted row is already sorted by product index.
      }
    }
  }

  for (std::size_t i = 0; i < automaton.pairs().size(); ++i) {
    StateMask fin(n, false);
    StateMask inf(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      fin[x] = automaton.InFin(i, x % nq);
      inf[x] = automaton.InInf(i, x % nq);
    }
    fin_.push_back(std::move(fin));
    inf_.push_back(std::move(inf));
  }
}

ProductGame BuildProduct(const StochasticGame& game,
                         const RabinAutomaton& automaton) {
  return ProductGame(game, automaton);
}

}  // namespace dpsynth
