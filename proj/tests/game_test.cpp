// Copyright 2026 The nlgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "nlgames/game.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nlgames/box.hpp"
#include "nlgames/error.hpp"
#include "oracles.hpp"

namespace nlgames {
namespace {

constexpr double kTight = 1e-12;
using PS = PureStrategy;

std::set<std::pair<int, int>> PairsOf(const EquilibriumReport& r) {
  std::set<std::pair<int, int>> out;
  for (const Equilibrium& e : r.equilibria) {
    out.emplace(static_cast<int>(e.alice), static_cast<int>(e.bob));
  }
  return out;
}

TEST(GameTest, RejectsNonPositiveParameters) {
  EXPECT_THROW(UtilityTable::FromParams({0.0, 1.0}), ValidationError);
  EXPECT_THROW(UtilityTable::FromParams({0.5, -1.0}), ValidationError);
}

TEST(GameTest, UtilityTableMatchesTheGame) {
  const UtilityTable t = UtilityTable::FromParams({0.5, 1.0});
  EXPECT_EQ(t.Utility(Player::kBob, 0, 0, 1, 1), 1.0);
  EXPECT_EQ(t.Utility(Player::kAlice, 0, 1, 1, 1), 0.5);
  EXPECT_EQ(t.Utility(Player::kBob, 1, 0, 0, 0), 0.5);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> param(0.01, 2.0);
  for (int n = 0; n < 20; ++n) {
    const GameParams g{param(rng), param(rng)};
    const UtilityTable u = UtilityTable::FromParams(g);
    EXPECT_EQ(u.Utility(Player::kAlice, 1, 1, 0, 0), 0.0);
    EXPECT_EQ(u.Utility(Player::kAlice, 1, 1, 1, 0), 0.75);
    for (int xa = 0; xa < 2; ++xa)
      for (int xb = 0; xb < 2; ++xb)
        for (int ya = 0; ya < 2; ++ya)
          for (int yb = 0; yb < 2; ++yb) {
            const auto ref = oracle::Utility(g.kappa, g.tau, xa, xb, ya, yb);
            EXPECT_EQ(u.Utility(Player::kAlice, xa, xb, ya, yb), ref.first);
            EXPECT_EQ(u.Utility(Player::kBob, xa, xb, ya, yb), ref.second);
          }
    for (int x = 0; x < 4; ++x) EXPECT_EQ(u.PriorOf(x / 2, x % 2), 0.25);
  }
}

TEST(GameTest, PriorMustBeADistribution) {
  const UtilityTable base = UtilityTable::FromParams({0.5, 1.0});
  const auto& ua = base.utilities(Player::kAlice);
  const auto& ub = base.utilities(Player::kBob);
  EXPECT_THROW(UtilityTable(ua, ub, {0.5, 0.5, 0.5, -0.5}), ValidationError);
  EXPECT_THROW(UtilityTable(ua, ub, {0.3, 0.3, 0.3, 0.3}), ValidationError);
  EXPECT_NO_THROW(UtilityTable(ua, ub, {0.1, 0.2, 0.3, 0.4}));
}

TEST(GameTest, AveragePayoffLandmarks) {
  const UtilityTable t = UtilityTable::FromParams({0.5, 1.0});
  const PayoffPair d = AveragePayoffs(t, PureStrategyBox(PS::kConst0, PS::kIdentity));
  EXPECT_NEAR(d.alice, 11.0 / 16, kTight);
  EXPECT_NEAR(d.bob, 7.0 / 16, kTight);
  // All mass on (0,0): the prior average of that column, (3/4, 3 kappa / 4).
  const PayoffPair z = AveragePayoffs(t, PureStrategyBox(PS::kConst0, PS::kConst0));
  EXPECT_NEAR(z.alice, 0.75, kTight);
  EXPECT_NEAR(z.bob, 0.375, kTight);
  const PayoffPair m = AveragePayoffs(t, PrDMixture(0.5));
  EXPECT_NEAR(m.alice, 0.71875, kTight);
  EXPECT_NEAR(m.bob, 0.59375, kTight);
}

TEST(GameTest, NonUniformPriorWeightsTypes) {
  const UtilityTable base = UtilityTable::FromParams({0.5, 1.0});
  const UtilityTable t(base.utilities(Player::kAlice), base.utilities(Player::kBob),
                       {0.0, 0.0, 0.0, 1.0});
  // Only x = (1,1) occurs; (Const0, Const1) plays (0,1) there.
  const PayoffPair p = AveragePayoffs(t, PureStrategyBox(PS::kConst0, PS::kConst1));
  EXPECT_NEAR(p.alice, 0.75, kTight);
  EXPECT_NEAR(p.bob, 0.75, kTight);
}

TEST(GameTest, PayoffsAreLinearInTheAdvice) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const UtilityTable t = UtilityTable::FromParams({0.8, 1.7});
  for (int n = 0; n < 200; ++n) {
    const Box a = Box::FromProbabilities(oracle::RandomNsTable(rng));
    const Box b = Box::FromProbabilities(oracle::RandomNsTable(rng));
    const double w = unit(rng);
    const PayoffPair pa = AveragePayoffs(t, a);
    const PayoffPair pb = AveragePayoffs(t, b);
    const PayoffPair pm = AveragePayoffs(t, Mix(w, a, b));
    EXPECT_NEAR(pm.alice, w * pa.alice + (1 - w) * pb.alice, kTight);
    EXPECT_NEAR(pm.bob, w * pa.bob + (1 - w) * pb.bob, kTight);
  }
}

TEST(GameTest, PayoffsLieWithinUtilityRange) {
  std::mt19937_64 rng(3);
  const UtilityTable t = UtilityTable::FromParams({1.3, 0.4});
  for (int n = 0; n < 200; ++n) {
    const PayoffPair p = AveragePayoffs(t, Box::FromProbabilities(oracle::RandomNsTable(rng)));
    EXPECT_GE(p.alice, 0.0);
    EXPECT_GE(p.bob, 0.0);
    EXPECT_LE(p.alice, t.MaxUtility(Player::kAlice));
    EXPECT_LE(p.bob, t.MaxUtility(Player::kBob));
  }
}

TEST(GameTest, PurePayoffTableMatchesSymbolicEntries) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> param(1e-3, 2.0);
  for (int n = 0; n < 20; ++n) {
    const double k = param(rng);
    const double t = param(rng);
    const PayoffGrid grid = PurePayoffTable(GameParams{k, t});
    const auto ref = oracle::PurePayoffGrid(k, t);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        EXPECT_NEAR(grid[a][b].alice, ref[a][b].first, kTight) << a << b;
        EXPECT_NEAR(grid[a][b].bob, ref[a][b].second, kTight) << a << b;
      }
  }
}

TEST(GameTest, PurePayoffLandmarks) {
  const double k = 0.3;
  const double t = 1.9;
  const PayoffGrid g = PurePayoffTable(GameParams{k, t});
  EXPECT_NEAR(g[0][0].bob, 0.75 * k, kTight);
  EXPECT_NEAR(g[2][3].alice, 9.0 / 16, kTight);
  EXPECT_NEAR(g[2][3].bob, 3.0 / 16 + (k + t) / 4, kTight);
  EXPECT_NEAR(g[3][3].alice, 1.0 / 8, kTight);
  EXPECT_NEAR(g[3][3].bob, t / 4, kTight);
}

TEST(NashTest, EquilibriaOfTheFairGame) {
  const EquilibriumReport r = FindPureNash(GameParams{0.5, 1.0});
  ASSERT_EQ(r.equilibria.size(), 3u);
  EXPECT_EQ(PairsOf(r), (std::set<std::pair<int, int>>{{0, 2}, {2, 3}, {3, 1}}));
  for (const Equilibrium& e : r.equilibria) {
    if (e.alice == PS::kConst0) {
      EXPECT_NEAR(e.payoffs.alice, 11.0 / 16, kTight);
      EXPECT_NEAR(e.payoffs.bob, 7.0 / 16, kTight);
      EXPECT_EQ(e.fairness, Fairness::kUnfairToB);
    } else if (e.alice == PS::kIdentity) {
      EXPECT_NEAR(e.payoffs.alice, 9.0 / 16, kTight);
      EXPECT_NEAR(e.payoffs.bob, 9.0 / 16, kTight);
      EXPECT_EQ(e.fairness, Fairness::kFair);
    } else {
      EXPECT_NEAR(e.payoffs.alice, 7.0 / 16, kTight);
      EXPECT_NEAR(e.payoffs.bob, 11.0 / 16, kTight);
      EXPECT_EQ(e.fairness, Fairness::kUnfairToA);
    }
  }
}

TEST(NashTest, AllUnfairWhenBothParametersAreLarge) {
  const EquilibriumReport r = FindPureNash(GameParams{2.0, 3.0});
  ASSERT_EQ(r.equilibria.size(), 3u);
  for (const Equilibrium& e : r.equilibria) {
    EXPECT_GT(e.payoffs.bob, e.payoffs.alice);
    EXPECT_EQ(e.fairness, Fairness::kUnfairToA);
  }
}

TEST(NashTest, SingleEquilibriumForLargeKappaSmallTau) {
  const EquilibriumReport r = FindPureNash(GameParams{1.0, 0.5});
  ASSERT_EQ(r.equilibria.size(), 1u);
  EXPECT_EQ(r.equilibria[0].alice, PS::kConst0);
  EXPECT_EQ(r.equilibria[0].bob, PS::kConst0);
  EXPECT_NEAR(r.equilibria[0].payoffs.alice, 0.75, kTight);
  EXPECT_NEAR(r.equilibria[0].payoffs.bob, 0.75, kTight);
}

TEST(NashTest, RegionLawOnAGrid) {
  for (double k = 0.05; k < 2.0; k += 0.1) {
    if (std::abs(k - 0.75) < 1e-6) continue;
    for (double t = k + 0.05; t < 3.0; t += 0.15) {
      const auto got = PairsOf(FindPureNash(GameParams{k, t}));
      const std::set<std::pair<int, int>> want =
          k < 0.75 ? std::set<std::pair<int, int>>{{0, 2}, {2, 3}, {3, 1}}
                   : std::set<std::pair<int, int>>{{0, 0}, {2, 3}, {3, 1}};
      EXPECT_EQ(got, want) << "kappa " << k << " tau " << t;
    }
  }
}

TEST(NashTest, AgreesWithExhaustiveCheck) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> param(0.01, 3.0);
  for (int n = 0; n < 300; ++n) {
    const double k = param(rng);
    const double t = param(rng);
    std::set<std::pair<int, int>> want;
    for (const auto& p : oracle::NashPairs(oracle::PurePayoffGrid(k, t), 1e-9)) want.insert(p);
    EXPECT_EQ(PairsOf(FindPureNash(GameParams{k, t})), want) << k << " " << t;
  }
}

TEST(NashTest, BoundaryReportsTies) {
  // At kappa = 3/4, Bob is indifferent between g1 and g3 against g1.
  const auto got = PairsOf(FindPureNash(GameParams{0.75, 1.5}));
  EXPECT_TRUE(got.count({0, 0}));
  EXPECT_TRUE(got.count({0, 2}));
}

TEST(FairnessTest, Classification) {
  EXPECT_EQ(ClassifyFairness({9.0 / 16, 9.0 / 16}), Fairness::kFair);
  EXPECT_EQ(ClassifyFairness({11.0 / 16, 7.0 / 16}), Fairness::kUnfairToB);
  EXPECT_EQ(ClassifyFairness({7.0 / 16, 11.0 / 16}), Fairness::kUnfairToA);
  EXPECT_EQ(ClassifyFairness({0.5, 0.5 + 1e-12}, 1e-9), Fairness::kFair);
  EXPECT_EQ(FairnessName(Fairness::kUnfairToB), "UnfairToB");
}

TEST(AdviceEquilibriumTest, DeterministicNashAdviceIsStable) {
  const UtilityTable t = UtilityTable::FromParams({0.5, 1.0});
  const AdviceDeviationReport r =
      IsAdviceEquilibrium(t, PureStrategyBox(PS::kConst0, PS::kIdentity));
  EXPECT_TRUE(r.is_equilibrium);
  EXPECT_LE(r.best_gain[0], 1e-12);
  EXPECT_LE(r.best_gain[1], 1e-12);
}

TEST(AdviceEquilibriumTest, BobRelabelsAwayFromConstantAdvice) {
  const UtilityTable t = UtilityTable::FromParams({0.5, 1.0});
  const AdviceDeviationReport r =
      IsAdviceEquilibrium(t, PureStrategyBox(PS::kConst0, PS::kConst0));
  EXPECT_FALSE(r.is_equilibrium);
  // Best unilateral move for Bob is g3, worth 7/16 - 3/8.
  EXPECT_NEAR(r.best_gain[1], 7.0 / 16 - 3.0 / 8, kTight);
}

TEST(AdviceEquilibriumTest, RelabelingReproducesPureDeviations) {
  const UtilityTable t = UtilityTable::FromParams({0.5, 1.0});
  const Box advice = PureStrategyBox(PS::kIdentity, PS::kFlip);
  for (std::uint8_t mask = 0; mask < 16; ++mask) {
    const Relabeling d{mask};
    const Box moved = ApplyRelabeling(advice, Player::kBob, d);
    // Bob's deviation composes his map with Flip; find the resulting g.
    int as_g = -1;
    for (int g = 0; g < 4; ++g) {
      if (d.Apply(0, oracle::G(3, 0)) == oracle::G(g, 0) &&
          d.Apply(1, oracle::G(3, 1)) == oracle::G(g, 1)) {
        as_g = g;
      }
    }
    ASSERT_GE(as_g, 0);
    const oracle::Table ref = oracle::DeterministicTable(2, as_g);
    for (std::size_t k = 0; k < 16; ++k) EXPECT_EQ(moved.probabilities()[k], ref[k]);
  }
  EXPECT_TRUE(Relabeling{}.IsIdentity());
}

TEST(AdviceEquilibriumTest, MixtureOfOneEquilibriumIsStable) {
  const UtilityTable t = UtilityTable::FromParams({0.5, 1.0});
  const Box d = PureStrategyBox(PS::kIdentity, PS::kFlip);
  EXPECT_TRUE(IsAdviceEquilibrium(t, Mix(0.3, d, d)).is_equilibrium);
}

// Empirical check that classical advice cannot beat an equilibrium for both
// players at once: sampled local boxes never dominate any of the three
// equilibria of G(1/2, 1).
TEST(ConvexityTest, LocalAdviceNeverDominatesAnEquilibrium) {
  std::mt19937_64 rng(6);
  const UtilityTable t = UtilityTable::FromParams({0.5, 1.0});
  const PayoffPair eqs[] = {{11.0 / 16, 7.0 / 16}, {9.0 / 16, 9.0 / 16}, {7.0 / 16, 11.0 / 16}};
  for (int n = 0; n < 5000; ++n) {
    const oracle::Table p =
        n % 2 ? oracle::RandomLocalTable(rng) : oracle::RandomNsTable(rng);
    if (oracle::MaxAbsChsh(p) > 2.0) continue;
    const PayoffPair f = AveragePayoffs(t, Box::FromProbabilities(p));
    for (const PayoffPair& e : eqs) {
      ASSERT_FALSE(f.alice > e.alice + 1e-12 && f.bob > e.bob + 1e-12) << n;
    }
  }
}

}  // namespace
}  // namespace nlgames
