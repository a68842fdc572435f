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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "dpsynth/error.h"
#include "dpsynth/game.h"
#include "dpsynth/markov_chain.h"
#include "dpsynth/rollout.h"

namespace dpsynth {
namespace {

TEST(RngTest, FixedSequenceForASeed) {
  Rng a(42), b(42), c(43);
  std::vector<double> xa, xb, xc;
  for (int i = 0; i < 100; ++i) {
    xa.push_back(a.Uniform());
    xb.push_back(b.Uniform());
    xc.push_back(c.Uniform());
    EXPECT_GE(xa.back(), 0.0);
    EXPECT_LT(xa.back(), 1.0);
  }
  EXPECT_EQ(xa, xb);
  EXPECT_NE(xa, xc);
  // First draw of the 64-bit Mersenne Twister with the default seed is
  // fixed by the standard: 14514284786278117030.
  Rng standard(5489);
  EXPECT_EQ(standard.Uniform(), static_cast<double>(14514284786278117030ull >> 11) *
                                    0x1.0p-53);
}

TEST(SampleSuccessorTest, FrequenciesFollowTheDistribution) {
  Distribution d = {{0, 0.2}, {3, 0.5}, {7, 0.3}};
  Rng rng(1);
  std::vector<int> hits(8, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++hits[SampleSuccessor(d, rng)];
  EXPECT_NEAR(hits[0] / double(draws), 0.2, 0.01);
  EXPECT_NEAR(hits[3] / double(draws), 0.5, 0.01);
  EXPECT_NEAR(hits[7] / double(draws), 0.3, 0.01);
  EXPECT_EQ(hits[0] + hits[3] + hits[7], draws);
}

TEST(SampleTrajectoryTest, FollowsPositiveProbabilityEdges) {
  MarkovChain c({{{1, 0.5}, {2, 0.5}}, PointMass(0), {{2, 0.9}, {0, 0.1}}},
                {0, 0, 1});
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    std::vector<std::size_t> path = SampleTrajectory(c, 0, 12, rng);
    ASSERT_EQ(path.size(), 12u);
    EXPECT_EQ(path[0], 0u);
    EXPECT_GT(PathMeasure(c, path), 0.0);
  }
  EXPECT_THROW(SampleTrajectory(c, 0, 0, rng), ParameterError);
}

TEST(EstimateSatisfactionTest, AbsorbingReachableSetGivesOne) {
  MarkovChain c({{{0, 0.5}, {1, 0.5}}, PointMass(1)}, {0, 1});
  SatisfactionEstimate e = EstimateSatisfaction(c, 0, {false, true}, 2000, 60, 9);
  EXPECT_EQ(e.estimate, 1.0);
  EXPECT_EQ(e.half_width, 0.0);
}

TEST(EstimateSatisfactionTest, LeavingTheSetFails) {
  // Enter state 1, then leave it for good.
  MarkovChain c({PointMass(1), PointMass(2), PointMass(2)}, {0, 1, 0});
  EXPECT_EQ(EstimateSatisfaction(c, 0, {false, true, false}, 10, 5, 1).estimate,
            0.0);
  // With a horizon of one the run ends inside.
  EXPECT_EQ(EstimateSatisfaction(c, 0, {false, true, false}, 10, 1, 1).estimate,
            1.0);
}

TEST(EstimateSatisfactionTest, MatchesAbsorptionProbability) {
  // From 0: 0.3 to the goal, 0.2 to a trap, else stay.
  MarkovChain c({{{0, 0.5}, {1, 0.3}, {2, 0.2}}, PointMass(1), PointMass(2)},
                {0, 1, 2});
  SatisfactionEstimate e =
      EstimateSatisfaction(c, 0, {false, true, false}, 20000, 100, 5);
  EXPECT_NEAR(e.estimate, 0.6, 4 * std::sqrt(0.24 / 20000));
  EXPECT_NEAR(e.half_width, 1.96 * std::sqrt(e.estimate * (1 - e.estimate) / 20000),
              1e-15);
  EXPECT_EQ(e.rollouts, 20000u);
}

TEST(EstimateSatisfactionTest, ReproducibleUnderSeed) {
  MarkovChain c({{{0, 0.5}, {1, 0.3}, {2, 0.2}}, PointMass(1), PointMass(2)},
                {0, 1, 2});
  SatisfactionEstimate a = EstimateSatisfaction(c, 0, {false, true, false}, 500, 50, 77);
  SatisfactionEstimate b = EstimateSatisfaction(c, 0, {false, true, false}, 500, 50, 77);
  EXPECT_EQ(a.successes, b.successes);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_THROW(EstimateSatisfaction(c, 0, {false, true, false}, 0, 50, 77),
               ParameterError);
  EXPECT_THROW(EstimateSatisfaction(c, 0, {false, true}, 5, 50, 77), ModelError);
}

}  // namespace
}  // namespace dpsynth
