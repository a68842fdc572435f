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

#ifndef DPSYNTH_PIPELINE_H_
#define DPSYNTH_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dpsynth/end_components.h"
#include "dpsynth/game.h"
#include "dpsynth/io.h"
#include "dpsynth/labeled_mdp.h"
#include "dpsynth/markov_chain.h"
#include "dpsynth/policy.h"
#include "dpsynth/privacy.h"
#include "dpsynth/product.h"
#include "dpsynth/rabin.h"
#include "dpsynth/relation.h"
#include "dpsynth/synthesis.h"

namespace dpsynth {

// Everything derived from a game, an automaton and a start state.
struct SynthesisRun {
  ProductGame product;
  AcceptingSet accepting;
  SynthesisResult synthesis;
  MixedPolicy adversary;   // best response to synthesis.mu
  std::size_t initial = 0;  // product state

  double InitialValue() const { return synthesis.values.values[initial]; }
};

SynthesisRun RunSynthesis(const StochasticGame& game,
                          const RabinAutomaton& automaton,
                          std::size_t start_state,
                          const IterationOptions& options = {});

// The MDP left once the adversary plays its best response and the defender
// is restricted to the support of its policy, cut down to the states
// reachable from the initial state.
struct PrivacyModel {
  SubMdp sub;
  MixedPolicy mu;     // defender policy on sub states
  MarkovChain chain;  // sub MDP under mu
  std::size_t initial = 0;  // sub index of the initial product state
};

PrivacyModel BuildPrivacyModel(const SynthesisRun& run);

struct PrivacyOptions {
  double m = 0.0;
  std::optional<double> delta;  // when set, relation pairs need d* <= delta - alpha M
  double term_tol = 1e-6;
  FixpointOptions fixpoint;
};

struct PrivacyResult {
  double alpha = 1.0;
  FixpointResult fixpoint;
  Relation relation;
  DpCertificate certificate;
};

PrivacyResult AnalyzePrivacy(const PrivacyModel& model, double epsilon,
                             const PrivacyOptions& options);

struct SweepOptions {
  // Policy closeness bound per cell; unset means 0.01 / alpha.
  std::optional<double> m;
  double term_tol = 1e-6;
  std::size_t trajectory_length = 10;
  std::uint64_t seed = 1;
  // Sub state the reference trajectory starts from; unset means the initial
  // state.
  std::optional<std::size_t> reference_start;
  std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
  FixpointOptions fixpoint;
};

// Sub index of the product state a play from game state `s` begins in.
// Throws ParameterError if that state is unreachable under the synthesized
// policies.
std::size_t SubStateForGameState(const SynthesisRun& run,
                                 const PrivacyModel& model, std::size_t s);

// One row per (epsilon, delta), epsilons outermost, both in the given
// order. Distances for a given alpha use the pointwise minimum of the fixed
// points computed for all smaller or equal alphas, which stays a sound bound
// because the skewed total variation does not increase with alpha.
std::vector<SweepRow> RunSweep(const PrivacyModel& model,
                               const std::vector<double>& epsilons,
                               const std::vector<double>& deltas,
                               const SweepOptions& options);

}  // namespace dpsynth

#endif  // DPSYNTH_PIPELINE_H_
