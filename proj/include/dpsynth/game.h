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

#ifndef DPSYNTH_GAME_H_
#define DPSYNTH_GAME_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dpsynth {

// Row sums must be within this distance of one. Rows outside the tolerance
// are rejected, never renormalized.
inline constexpr double kProbabilityTolerance = 1e-9;

struct Successor {
  std::size_t state;
  double prob;

  friend bool operator==(const Successor&, const Successor&) = default;
};

// Sparse probability vector: entries sorted by state, no duplicates, every
// probability strictly positive.
using Distribution = std::vector<Successor>;

// Sorts, merges duplicate states and drops zero entries. Throws ModelError on
// negative or non-finite entries, on a state index >= num_states, or when the
// total differs from one by more than kProbabilityTolerance. `what` names the
// row in the error message.
Distribution MakeDistribution(std::vector<Successor> entries,
                              std::size_t num_states, const std::string& what);

// Dense vector -> validated sparse distribution.
Distribution DistributionFromDense(std::span<const double> dense,
                                   const std::string& what);

// Probability of `state` under `dist` (binary search).
double ProbabilityOf(const Distribution& dist, std::size_t state);

// A point mass on `state`.
Distribution PointMass(std::size_t state);

// Two-player labeled stochastic game. The defender and adversary choose
// actions simultaneously; each state carries exactly one atomic proposition.
// States and actions are identified by index, names are metadata only.
class StochasticGame {
 public:
  // `rows` is indexed by (state * |def| + def_action) * |adv| + adv_action.
  // Throws ModelError when a row is not a distribution, a label is out of
  // range, or any dimension is zero.
  StochasticGame(std::vector<std::string> def_actions,
                 std::vector<std::string> adv_actions,
                 std::vector<std::string> props,
                 std::vector<std::size_t> labels,
                 std::vector<Distribution> rows);

  std::size_t num_states() const { return labels_.size(); }
  std::size_t num_def_actions() const { return def_actions_.size(); }
  std::size_t num_adv_actions() const { return adv_actions_.size(); }

  const std::vector<std::string>& def_actions() const { return def_actions_; }
  const std::vector<std::string>& adv_actions() const { return adv_actions_; }
  const std::vector<std::string>& props() const { return props_; }

  std::size_t label(std::size_t s) const { return labels_[s]; }
  const std::vector<std::size_t>& labels() const { return labels_; }
  const std::string& label_name(std::size_t s) const {
    return props_[labels_[s]];
  }

  const Distribution& transition(std::size_t s, std::size_t def_action,
                                 std::size_t adv_action) const {
    return rows_[RowIndex(s, def_action, adv_action)];
  }
  double probability(std::size_t s, std::size_t def_action,
                     std::size_t adv_action, std::size_t next) const {
    return ProbabilityOf(transition(s, def_action, adv_action), next);
  }

  std::optional<std::size_t> FindProp(const std::string& name) const;
  std::optional<std::size_t> FindDefAction(const std::string& name) const;
  std::optional<std::size_t> FindAdvAction(const std::string& name) const;

 private:
  std::size_t RowIndex(std::size_t s, std::size_t d, std::size_t a) const {
    return (s * def_actions_.size() + d) * adv_actions_.size() + a;
  }

  std::vector<std::string> def_actions_;
  std::vector<std::string> adv_actions_;
  std::vector<std::string> props_;
  std::vector<std::size_t> labels_;
  std::vector<Distribution> rows_;
};

}  // namespace dpsynth

#endif  // DPSYNTH_GAME_H_
