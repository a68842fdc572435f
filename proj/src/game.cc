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

#include "dpsynth/game.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dpsynth/error.h"

namespace dpsynth {
namespace {

std::optional<std::size_t> IndexOf(const std::vector<std::string>& names,
                                   const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

void CheckUnique(const std::vector<std::string>& names, const char* kind) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      if (names[i] == names[j]) {
        throw ModelError(std::string("duplicate ") + kind + " name '" +
                         names[i] + "'");
      }
    }
  }
}

}  // namespace

Distribution MakeDistribution(std::vector<Successor> entries,
                              std::size_t num_states, const std::string& what) {
  std::sort(entries.begin(), entries.end(),
            [](const Successor& a, const Successor& b) {
              return a.state < b.state;
            });
  Distribution out;
  out.reserve(entries.size());
  double total = 0.0;
  for (const Successor& e : entries) {
    if (!std::isfinite(e.prob) || e.prob < 0.0) {
      std::ostringstream msg;
      msg << what << ": invalid probability " << e.prob << " for state "
          << e.state;
      throw ModelError(msg.str());
    }
    if (e.state >= num_states) {
      std::ostringstream msg;
      msg << what << ": successor state " << e.state << " out of range";
      throw ModelError(msg.str());
    }
    total += e.prob;
    if (e.prob == 0.0) continue;
    if (!out.empty() && out.back().state == e.state) {
      out.back().prob += e.prob;
    } else {
      out.push_back(e);
    }
  }
  if (std::abs(total - 1.0) > kProbabilityTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": probabilities sum to " << total << ", expected 1";
    throw ModelError(msg.str());
  }
  return out;
}

Distribution DistributionFromDense(std::span<const double> dense,
                                   const std::string& what) {
  std::vector<Successor> entries;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0.0) entries.push_back({i, dense[i]});
  }
  return MakeDistribution(std::move(entries), dense.size(), what);
}

double ProbabilityOf(const Distribution& dist, std::size_t state) {
  auto it = std::lower_bound(
      dist.begin(), dist.end(), state,
      [](const Successor& e, std::size_t s) { return e.state < s; });
  return (it != dist.end() && it->state == state) ? it->prob : 0.0;
}

Distribution PointMass(std::size_t state) { return {{state, 1.0}}; }

StochasticGame::StochasticGame(std::vector<std::string> def_actions,
                               std::vector<std::string> adv_actions,
                               std::vector<std::string> props,
                               std::vector<std::size_t> labels,
                               std::vector<Distribution> rows)
    : def_actions_(std::move(def_actions)),
      adv_actions_(std::move(adv_actions)),
      props_(std::move(props)),
      labels_(std::move(labels)),
      rows_(std::move(rows)) {
  if (labels_.empty()) throw ModelError("game has no states");
  if (def_actions_.empty()) throw ModelError("game has no defender actions");
  if (adv_actions_.empty()) throw ModelError("game has no adversary actions");
  if (props_.empty()) throw ModelError("game has no atomic propositions");
  CheckUnique(def_actions_, "defender action");
  CheckUnique(adv_actions_, "adversary action");
  CheckUnique(props_, "proposition");
  const std::size_t n = labels_.size();
  for (std::size_t s = 0; s < n; ++s) {
    if (labels_[s] >= props_.size()) {
      throw ModelError("state " + std::to_string(s) +
                       " has a label outside the proposition set");
    }
  }
  const std::size_t expected = n * def_actions_.size() * adv_actions_.size();
  if (rows_.size() != expected) {
    throw ModelError("game expects " + std::to_string(expected) +
                     " transition rows, got " + std::to_string(rows_.size()));
  }
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t d = 0; d < def_actions_.size(); ++d) {
      for (std::size_t a = 0; a < adv_actions_.size(); ++a) {
        std::string what = "transition (" + std::to_string(s) + ", " +
                           def_actions_[d] + ", " + adv_actions_[a] + ")";
        Distribution& row = rows_[RowIndex(s, d, a)];
        row = MakeDistribution(std::move(row), n, what);
      }
    }
  }
}

std::optional<std::size_t> StochasticGame::FindProp(
    const std::string& name) const {
  return IndexOf(props_, name);
}

std::optional<std::size_t> StochasticGame::FindDefAction(
    const std::string& name) const {
  return IndexOf(def_actions_, name);
}

std::optional<std::size_t> StochasticGame::FindAdvAction(
    const std::string& name) const {
  return IndexOf(adv_actions_, name);
}

}  // namespace dpsynth
