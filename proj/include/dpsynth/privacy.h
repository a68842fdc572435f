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

#ifndef DPSYNTH_PRIVACY_H_
#define DPSYNTH_PRIVACY_H_

#include <cstddef>
#include <vector>

#include "dpsynth/game.h"
#include "dpsynth/labeled_mdp.h"
#include "dpsynth/markov_chain.h"

namespace dpsynth {

// max{x - alpha y, y - alpha x, 0}. Throws ParameterError if alpha < 1.
double DeltaAlpha(double x, double y, double alpha);

// Symmetric table of pairwise distances in [0, 1].
class DistanceTable {
 public:
  DistanceTable() = default;
  explicit DistanceTable(std::size_t num_states, double fill = 0.0)
      : n_(num_states), data_(num_states * num_states, fill) {}

  std::size_t num_states() const { return n_; }
  double operator()(std::size_t s, std::size_t t) const {
    return data_[s * n_ + t];
  }
  void Set(std::size_t s, std::size_t t, double v) {
    data_[s * n_ + t] = v;
    data_[t * n_ + s] = v;
  }
  // Largest |this - other| over all entries.
  double MaxDifference(const DistanceTable& other) const;
  const std::vector<double>& data() const { return data_; }

  friend bool operator==(const DistanceTable&, const DistanceTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

// max over x in [0,1]^S with x_s - alpha x_t <= d(s,t) for all s != t of
// sum_s (omega(s) - alpha omega'(s)) x_s, and the same with omega and omega'
// swapped; the larger value clamped to [0, 1]. The program is solved over
// the union of the two supports and grown with any state whose cheapest
// feasible extension violates a constraint, which gives the optimum of the
// program over all of S.
double SkewedKantorovich(const Distribution& omega,
                         const Distribution& omega_prime,
                         const DistanceTable& d, double alpha);

// One side of the program above, without clamping.
double SkewedKantorovichOneSided(const Distribution& omega,
                                 const Distribution& omega_prime,
                                 const DistanceTable& d, double alpha);

// 1 for pairs an observer can tell apart immediately: different labels, or
// exactly one of the two states terminal. 0 elsewhere.
DistanceTable BaseDistance(const LabeledMdp& mdp);

// F(d)(s,t) = 1 on base-distinguishable pairs. Otherwise the max over
// a in A(s) u A(t) of SkewedKantorovich(P(.|s,a), P(.|t,a), d, alpha), where
// an action enabled at only one of the two states contributes 1.
DistanceTable FtvStep(const DistanceTable& d, const LabeledMdp& mdp,
                      double alpha);

struct FixpointOptions {
  double tol = 1e-9;
  std::size_t max_iter = 10000;
};

struct FixpointResult {
  DistanceTable distances;
  bool converged = false;
  std::size_t iterations = 0;
};

// Iterates FtvStep from BaseDistance until the sup-norm change is below tol.
// Entries whose program inputs did not change between sweeps are carried
// over, which gives the same iterates as recomputing every entry.
FixpointResult FtvFixpoint(const LabeledMdp& mdp, double alpha,
                           const FixpointOptions& options = {});

struct ValueGapReport {
  double max_violation = 0.0;  // max of Delta_alpha(V_k) - F^k, <= 0 if sound
  std::size_t step = 0;
  std::size_t s = 0;
  std::size_t t = 0;
};

// Compares Delta_alpha(V_k(s), V_k(t)) with F^k(s,t) for k = 0..n, where V_k
// are the Bellman iterates of `mdp` and F^k starts from BaseDistance.
ValueGapReport ValueGapCheck(const LabeledMdp& mdp, double alpha,
                             std::size_t n);

// sum over label words w of length h of max(nu_s(w) - alpha nu_t(w), 0),
// maximized with s and t swapped. Throws ParameterError if h is zero or
// exceeds max_horizon.
double EmpiricalTvAlpha(const MarkovChain& chain, std::size_t s, std::size_t t,
                        double alpha, std::size_t horizon,
                        std::size_t max_horizon = 16);

}  // namespace dpsynth

#endif  // DPSYNTH_PRIVACY_H_
