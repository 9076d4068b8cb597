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

// Two-player Bayesian games with binary types and actions, played with
// advice boxes.

#ifndef NLGAMES_GAME_HPP_
#define NLGAMES_GAME_HPP_

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "nlgames/box.hpp"
#include "nlgames/types.hpp"

namespace nlgames {

// Utilities u_A, u_B indexed (x_A, x_B, y_A, y_B) like a Box, plus a prior
// over joint types indexed 2 * x_A + x_B.
class UtilityTable {
 public:
  using Tensor = std::array<double, 16>;
  using Prior = std::array<double, 4>;

  static constexpr Prior kUniformPrior = {0.25, 0.25, 0.25, 0.25};

  // The utility table of G(kappa, tau) with a uniform prior.
  static UtilityTable FromParams(const GameParams& params);

  // Throws ValidationError if the prior has a negative entry or does not sum
  // to 1 within 1e-12.
  UtilityTable(const Tensor& alice, const Tensor& bob,
               const Prior& prior = kUniformPrior);

  double Utility(Player p, int xa, int xb, int ya, int yb) const {
    return utilities(p)[BoxIndex(xa, xb, ya, yb)];
  }
  const Tensor& utilities(Player p) const {
    return p == Player::kAlice ? alice_ : bob_;
  }
  double PriorOf(int xa, int xb) const {
    return prior_[static_cast<std::size_t>(2 * xa + xb)];
  }
  const Prior& prior() const { return prior_; }
  double MaxUtility(Player p) const;

 private:
  Tensor alice_{};
  Tensor bob_{};
  Prior prior_{};
};

// F_i = sum_{x,y} P(x) P(y|x) u_i(x, y).
PayoffPair AveragePayoffs(const UtilityTable& table, const Box& advice);

inline Box PureStrategyBox(PureStrategy alice, PureStrategy bob) {
  return DeterministicBox(alice, bob);
}

// grid[a][b] holds the payoffs of (g_A, g_B) with a, b the enum values.
using PayoffGrid = std::array<std::array<PayoffPair, 4>, 4>;

PayoffGrid PurePayoffTable(const UtilityTable& table);
PayoffGrid PurePayoffTable(const GameParams& params);

enum class Fairness { kFair, kUnfairToA, kUnfairToB };

std::string_view FairnessName(Fairness f);

// Fair if |F_A - F_B| <= tol, UnfairToB if F_A exceeds F_B by more than tol,
// UnfairToA otherwise.
Fairness ClassifyFairness(const PayoffPair& p, double tol = 1e-9);

struct Equilibrium {
  PureStrategy alice;
  PureStrategy bob;
  PayoffPair payoffs;
  Fairness fairness;
};

struct EquilibriumReport {
  std::vector<Equilibrium> equilibria;
};

// Weak pure-strategy Nash equilibria: no unilateral pure deviation gains more
// than |tol|. Ties at boundaries (e.g. kappa = 3/4) are reported.
EquilibriumReport FindPureNash(const UtilityTable& table, double tol = 1e-9);
EquilibriumReport FindPureNash(const GameParams& params, double tol = 1e-9);

// A deterministic post-processing d(type, recommended action) -> action.
// Bit (2 * type + action) of |mask| is the output.
struct Relabeling {
  std::uint8_t mask = 0b1010;  // identity

  int Apply(int type, int action) const {
    return (mask >> (2 * type + action)) & 1;
  }
  bool IsIdentity() const { return mask == 0b1010; }
};

// The box obtained when |player| post-processes its output with |d|.
Box ApplyRelabeling(const Box& advice, Player player, Relabeling d);

struct AdviceDeviationReport {
  bool is_equilibrium = false;
  // Largest payoff gain over the 16 relabelings, per player (A, B).
  std::array<double, 2> best_gain{};
  std::array<Relabeling, 2> best_deviation{};
};

// Correlated-equilibrium check of |advice|: no player gains more than |tol|
// by any of the 16 deterministic relabelings of its recommendation.
AdviceDeviationReport IsAdviceEquilibrium(const UtilityTable& table,
                                          const Box& advice,
                                          double tol = 1e-9);

}  // namespace nlgames

#endif  // NLGAMES_GAME_HPP_
