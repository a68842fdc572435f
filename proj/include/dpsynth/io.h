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

#ifndef DPSYNTH_IO_H_
#define DPSYNTH_IO_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "dpsynth/end_components.h"
#include "dpsynth/game.h"
#include "dpsynth/policy.h"
#include "dpsynth/product.h"
#include "dpsynth/rabin.h"
#include "dpsynth/relation.h"

namespace dpsynth {

// Shortest text that reads back to the same double ("%.17g").
std::string FormatDouble(double v);

// Game files, whitespace separated, '#' comments:
//   states N
//   def_actions <name>...
//   adv_actions <name>...
//   props <name>...
//   label <s> <prop>                 one per state
//   t <s> <def> <adv> <s'> <prob>    omitted entries are 0
// Throws ParseError carrying the line number.
StochasticGame ReadGame(std::istream& in);
void WriteGame(const StochasticGame& game, std::ostream& out);

// Automaton files:
//   aut_states N
//   initial <q0>
//   step <q> <letter> <q'>
//   pair <i> L: <q>... K: <q>...
// The alphabet is the set of letters used by step lines in order of first
// appearance; every (q, letter) needs a step line.
RabinAutomaton ReadAutomaton(std::istream& in);
void WriteAutomaton(const RabinAutomaton& automaton, std::ostream& out);

// `policy <state> <action> <prob>` lines, zero entries omitted.
void WritePolicy(const MixedPolicy& policy,
                 const std::vector<std::string>& actions, std::ostream& out);
MixedPolicy ReadPolicy(std::istream& in, std::size_t num_states,
                       const std::vector<std::string>& actions);

// CSV with header `state,value`.
void WriteValues(const std::vector<double>& values, std::ostream& out);
std::vector<double> ReadValues(std::istream& in);

// CSV with header `state,game_state,aut_state`, one row per member of E.
void WriteAcceptingSet(const AcceptingSet& e, const ProductGame& product,
                       std::ostream& out);

// `pair <s> <s'> <dstar>` lines; `states` maps relation indices to the
// indices written (e.g. sub-MDP states back to product states).
void WriteRelation(const Relation& relation,
                   const std::vector<std::size_t>& states, std::ostream& out);

// `key value` lines: epsilon, alpha, M, delta_min (or "undefined"), pairs,
// off_diagonal_pairs.
void WriteCertificate(const DpCertificate& cert, std::ostream& out);

struct SweepRow {
  double epsilon;
  double delta;
  double m;
  std::uint64_t count;
  bool truncated;
};

// CSV with header `epsilon,delta,M,num_dp_trajectories`.
void WriteSweep(const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace dpsynth

#endif  // DPSYNTH_IO_H_
