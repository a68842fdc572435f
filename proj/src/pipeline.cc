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

#include "dpsynth/pipeline.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "dpsynth/error.h"
#include "dpsynth/rollout.h"

namespace dpsynth {

SynthesisRun RunSynthesis(const StochasticGame& game,
                          const RabinAutomaton& automaton,
                          std::size_t start_state,
                          const IterationOptions& options) {
  if (start_state >= game.num_states()) {
    throw ParameterError("start state " + std::to_string(start_state) +
                         " is not a game state");
  }
  ProductGame product = BuildProduct(game, automaton);
  AcceptingSet accepting = AcceptingStates(product);
  SynthesisResult synthesis =
      StackelbergValueIteration(product, accepting, options);
  MixedPolicy adversary =
      BestResponseAdversary(product, synthesis.mu, accepting, options);
  std::size_t initial = product.InitialState(start_state);
  return {std::move(product), std::move(accepting), std::move(synthesis),
          std::move(adversary), initial};
}

PrivacyModel BuildPrivacyModel(const SynthesisRun& run) {
  LabeledMdp mdp = RestrictToPolicy(run.product, run.synthesis.mu,
                                    run.adversary, run.accepting);
  SubMdp sub = ReachableSubMdp(mdp, run.initial);
  MixedPolicy mu = run.synthesis.mu.Restrict(sub.original);
  MarkovChain chain = ChainFromMdp(sub.mdp, mu);
  std::size_t initial = static_cast<std::size_t>(
      std::lower_bound(sub.original.begin(), sub.original.end(), run.initial) -
      sub.original.begin());
  return {std::move(sub), std::move(mu), std::move(chain), initial};
}

PrivacyResult AnalyzePrivacy(const PrivacyModel& model, double epsilon,
                             const PrivacyOptions& options) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw ParameterError("epsilon must be a finite non-negative number");
  }
  PrivacyResult out;
  out.alpha = std::exp(epsilon);
  out.fixpoint = FtvFixpoint(model.sub.mdp, out.alpha, options.fixpoint);
  RelationOptions ro;
  ro.alpha = out.alpha;
  ro.m = options.m;
  ro.term_tol = options.term_tol;
  if (options.delta) ro.budget = *options.delta - out.alpha * options.m;
  out.relation = BuildRelation(model.sub.mdp, model.mu,
                               out.fixpoint.distances, ro);
  out.certificate = MakeDpCertificate(out.relation);
  return out;
}

std::size_t SubStateForGameState(const SynthesisRun& run,
                                 const PrivacyModel& model, std::size_t s) {
  if (s >= run.product.num_game_states()) {
    throw ParameterError("game state " + std::to_string(s) + " is undefined");
  }
  const std::size_t x = run.product.InitialState(s);
  const auto& original = model.sub.original;
  auto it = std::find(original.begin(), original.end(), x);
  if (it == original.end()) {
    throw ParameterError("game state " + std::to_string(s) +
                         " is unreachable under the synthesized policies");
  }
  return static_cast<std::size_t>(it - original.begin());
}

std::vector<SweepRow> RunSweep(const PrivacyModel& model,
                               const std::vector<double>& epsilons,
                               const std::vector<double>& deltas,
                               const SweepOptions& options) {
  for (double e : epsilons) {
    if (!(e >= 0.0) || !std::isfinite(e)) {
      throw ParameterError("epsilon must be a finite non-negative number");
    }
  }
  const std::size_t start = options.reference_start.value_or(model.initial);
  if (start >= model.chain.num_states()) {
    throw ParameterError("reference start is not a state of the model");
  }
  Rng rng(options.seed);
  const std::vector<std::size_t> reference = SampleTrajectory(
      model.chain, start, options.trajectory_length, rng);

  // Fixed points in increasing epsilon, then running pointwise minima.
  std::vector<double> sorted = epsilons;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::map<double, DistanceTable> envelope;
  std::optional<DistanceTable> running;
  for (double e : sorted) {
    DistanceTable d =
        FtvFixpoint(model.sub.mdp, std::exp(e), options.fixpoint).distances;
    if (running) {
      const std::size_t n = d.num_states();
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = s + 1; t < n; ++t) {
          d.Set(s, t, std::min(d(s, t), (*running)(s, t)));
        }
      }
    }
    running = d;
    envelope.emplace(e, std::move(d));
  }

  std::vector<SweepRow> rows;
  for (double e : epsilons) {
    const double alpha = std::exp(e);
    const double m = options.m ? *options.m : 0.01 / alpha;
    for (double delta : deltas) {
      RelationOptions ro;
      ro.alpha = alpha;
      ro.m = m;
      ro.term_tol = options.term_tol;
      ro.budget = delta - alpha * m;
      Relation r = BuildRelation(model.sub.mdp, model.mu, envelope.at(e), ro);
      TrajectoryCount c =
          CountDpTrajectories(model.chain, reference, r, options.budget);
      rows.push_back({e, delta, m, c.count, c.truncated});
    }
  }
  return rows;
}

}  // namespace dpsynth
