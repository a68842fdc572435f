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

#ifndef DPSYNTH_RELATION_H_
#define DPSYNTH_RELATION_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "dpsynth/labeled_mdp.h"
#include "dpsynth/markov_chain.h"
#include "dpsynth/policy.h"
#include "dpsynth/privacy.h"

namespace dpsynth {

// Symmetric relation over the states of an MDP. Pairs are stored once with
// s <= t, sorted, each with its fixed-point distance.
class Relation {
 public:
  struct Pair {
    std::size_t s;
    std::size_t t;
    double distance;

    friend bool operator==(const Pair&, const Pair&) = default;
  };

  Relation() = default;
  Relation(std::size_t num_states, std::vector<Pair> pairs, double alpha,
           double m);

  std::size_t num_states() const { return n_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  bool Contains(std::size_t s, std::size_t t) const {
    return member_[s * n_ + t];
  }
  std::size_t num_off_diagonal() const;
  double alpha() const { return alpha_; }
  double m() const { return m_; }

 private:
  std::size_t n_ = 0;
  std::vector<Pair> pairs_;
  std::vector<bool> member_;
  double alpha_ = 1.0;
  double m_ = 0.0;
};

struct RelationOptions {
  double alpha = 1.0;
  double m = 0.0;  // bound on the policy total variation
  // Pairs need distance <= budget; infinity admits every distance.
  double budget = std::numeric_limits<double>::infinity();
  double term_tol = 1e-6;
};

// Greatest relation R such that every (s, t) in R has equal labels, equal
// terminal status, policy total variation <= m and distance <= budget;
// terminal pairs additionally need distance <= term_tol, and non-terminal
// pairs need successors u of s and u' of t under enabled actions with
// (u, u') in R. `mu` is indexed like the MDP.
Relation BuildRelation(const LabeledMdp& mdp, const MixedPolicy& mu,
                       const DistanceTable& distances,
                       const RelationOptions& options);

struct DpCertificate {
  double epsilon = 0.0;
  double alpha = 1.0;
  double m = 0.0;
  bool defined = false;  // false for an empty relation
  double delta_min = 0.0;
  std::size_t pairs = 0;
  std::size_t off_diagonal_pairs = 0;

  bool Certifies(double delta) const { return defined && delta >= delta_min; }
};

// delta_min = alpha m + max distance over R, epsilon = ln alpha.
DpCertificate MakeDpCertificate(const Relation& relation);

struct TrajectoryCount {
  std::uint64_t count = 0;
  bool truncated = false;  // count is a lower bound
};

// Number of positive-probability state sequences t' of the reference's
// length with (reference_i, t'_i) in R at every step. The count is capped at
// `budget`; hitting the cap sets `truncated`.
TrajectoryCount CountDpTrajectories(
    const MarkovChain& chain, const std::vector<std::size_t>& reference,
    const Relation& relation,
    std::uint64_t budget = std::numeric_limits<std::uint64_t>::max());

}  // namespace dpsynth

#endif  // DPSYNTH_RELATION_H_
