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

#ifndef DPSYNTH_SYNTHESIS_H_
#define DPSYNTH_SYNTHESIS_H_

#include <cstddef>
#include <vector>

#include "dpsynth/end_components.h"
#include "dpsynth/labeled_mdp.h"
#include "dpsynth/policy.h"
#include "dpsynth/product.h"

namespace dpsynth {

struct IterationOptions {
  double tol = 1e-9;
  std::size_t max_iter = 100000;
};

struct ValueTable {
  std::vector<double> values;
  bool converged = false;
  std::size_t iterations = 0;
};

struct SynthesisResult {
  ValueTable values;
  MixedPolicy mu;  // defender policy over all product states
};

// Max-min reachability of E. V is pinned to 1 on E; each Jacobi sweep solves
// the matrix game sum_x' T(x'|x,d,a) V(x') at every other state. After the
// sweeps the defender strategy at each state is chosen, among strategies
// that keep the converged value, to maximize the worst-case probability of
// moving closer to E (states are ranked by distance to E). This rules out
// strategies that preserve the value by stalling forever. On E the policy is
// uniform over the actions that keep play inside E.
SynthesisResult StackelbergValueIteration(const ProductGame& product,
                                          const AcceptingSet& e,
                                          const IterationOptions& options = {});

// min over adversary policies of P(reach E) with the defender fixed to mu.
ValueTable ReachProbability(const ProductGame& product, const MixedPolicy& mu,
                            const AcceptingSet& e,
                            const IterationOptions& options = {});

// Deterministic adversary policy attaining ReachProbability: at each state
// the action minimizing the expected successor value, lowest index on ties.
MixedPolicy BestResponseAdversary(const ProductGame& product,
                                  const MixedPolicy& mu, const AcceptingSet& e,
                                  const IterationOptions& options = {});

// V_{n+1}(x) = max_{a in A(x)} sum_x' P(x'|x,a) V_n(x') from V_0 = 0, with
// terminal states fixed to 1 from the first sweep on.
ValueTable BellmanValuesUnderPolicy(const LabeledMdp& mdp,
                                    const IterationOptions& options = {});

// The first n + 1 iterates V_0 .. V_n of the recursion above.
std::vector<std::vector<double>> BellmanIterates(const LabeledMdp& mdp,
                                                 std::size_t n);

}  // namespace dpsynth

#endif  // DPSYNTH_SYNTHESIS_H_
