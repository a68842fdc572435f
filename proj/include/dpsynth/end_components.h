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

#ifndef DPSYNTH_END_COMPONENTS_H_
#define DPSYNTH_END_COMPONENTS_H_

#include <cstddef>
#include <vector>

#include "dpsynth/product.h"

namespace dpsynth {

// The accepting set E of a product game together with, for each member, the
// defender actions that keep every adversary reply and successor inside the
// accepting component containing it.
struct AcceptingSet {
  StateMask member;
  std::vector<std::vector<std::size_t>> stay_actions;  // empty off E

  std::size_t size() const;
  std::vector<std::size_t> States() const;
};

// Union over Rabin pairs i of the maximal defender-closable components that
// avoid L(i) and meet K(i). A set C is defender-closable when every state in
// C has a defender action whose successors stay in C under every adversary
// action. Components are strongly connected under the closing actions.
AcceptingSet AcceptingStates(const ProductGame& product);

}  // namespace dpsynth

#endif  // DPSYNTH_END_COMPONENTS_H_
