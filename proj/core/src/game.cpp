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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nlgames/error.hpp"

namespace nlgames {

void GameParams::Validate() const {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw ValidationError("kappa must be positive");
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw ValidationError("tau must be positive");
  }
}

UtilityTable UtilityTable::FromParams(const GameParams& params) {
  params.Validate();
  Tensor alice{};
  Tensor bob{};
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      if ((xa & xb) == 0) {
        alice[BoxIndex(xa, xb, 0, 0)] = 1.0;
        bob[BoxIndex(xa, xb, 0, 0)] = params.kappa;
        alice[BoxIndex(xa, xb, 1, 1)] = 0.5;
        bob[BoxIndex(xa, xb, 1, 1)] = params.tau;
      } else {
        alice[BoxIndex(xa, xb, 0, 1)] = 0.75;
        bob[BoxIndex(xa, xb, 0, 1)] = 0.75;
        alice[BoxIndex(xa, xb, 1, 0)] = 0.75;
        bob[BoxIndex(xa, xb, 1, 0)] = 0.75;
      }
    }
  }
  return UtilityTable(alice, bob);
}

UtilityTable::UtilityTable(const Tensor& alice, const Tensor& bob,
                           const Prior& prior)
    : alice_(alice), bob_(bob), prior_(prior) {
  double total = 0.0;
  for (double p : prior_) {
    if (!(p >= 0.0)) throw ValidationError("prior entry is negative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "prior does not sum to 1 (sum = " << total << ")";
    throw ValidationError(os.str());
  }
  for (std::size_t k = 0; k < 16; ++k) {
    if (!std::isfinite(alice_[k]) || !std::isfinite(bob_[k])) {
      throw ValidationError("utility entry is not finite");
    }
  }
}

double UtilityTable::MaxUtility(Player p) const {
  const Tensor& u = utilities(p);
  return *std::max_element(u.begin(), u.end());
}

PayoffPair AveragePayoffs(const UtilityTable& table, const Box& advice) {
  PayoffPair out;
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      const double px = table.PriorOf(xa, xb);
      for (int ya = 0; ya < 2; ++ya) {
        for (int yb = 0; yb < 2; ++yb) {
          const double w = px * advice(xa, xb, ya, yb);
          out.alice += w * table.Utility(Player::kAlice, xa, xb, ya, yb);
          out.bob += w * table.Utility(Player::kBob, xa, xb, ya, yb);
        }
      }
    }
  }
  return out;
}

PayoffGrid PurePayoffTable(const UtilityTable& table) {
  PayoffGrid grid{};
  for (PureStrategy ga : kAllPureStrategies) {
    for (PureStrategy gb : kAllPureStrategies) {
      grid[static_cast<std::size_t>(ga)][static_cast<std::size_t>(gb)] =
          AveragePayoffs(table, PureStrategyBox(ga, gb));
    }
  }
  return grid;
}

PayoffGrid PurePayoffTable(const GameParams& params) {
  return PurePayoffTable(UtilityTable::FromParams(params));
}

std::string_view FairnessName(Fairness f) {
  switch (f) {
    case Fairness::kFair:
      return "Fair";
    case Fairness::kUnfairToA:
      return "UnfairToA";
    case Fairness::kUnfairToB:
      return "UnfairToB";
  }
  return "?";
}

Fairness ClassifyFairness(const PayoffPair& p, double tol) {
  if (std::abs(p.alice - p.bob) <= tol) return Fairness::kFair;
  if (p.alice > p.bob + tol) return Fairness::kUnfairToB;
  return Fairness::kUnfairToA;
}

EquilibriumReport FindPureNash(const UtilityTable& table, double tol) {
  const PayoffGrid grid = PurePayoffTable(table);
  EquilibriumReport report;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      const PayoffPair here = grid[a][b];
      bool stable = true;
      for (std::size_t d = 0; d < 4 && stable; ++d) {
        if (grid[d][b].alice > here.alice + tol) stable = false;
        if (grid[a][d].bob > here.bob + tol) stable = false;
      }
      if (stable) {
        report.equilibria.push_back({static_cast<PureStrategy>(a),
                                     static_cast<PureStrategy>(b), here,
                                     ClassifyFairness(here, tol)});
      }
    }
  }
  return report;
}

EquilibriumReport FindPureNash(const GameParams& params, double tol) {
  return FindPureNash(UtilityTable::FromParams(params), tol);
}

Box ApplyRelabeling(const Box& advice, Player player, Relabeling d) {
  Box::Table t{};
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      for (int ya = 0; ya < 2; ++ya) {
        for (int yb = 0; yb < 2; ++yb) {
          const double p = advice(xa, xb, ya, yb);
          if (player == Player::kAlice) {
            t[BoxIndex(xa, xb, d.Apply(xa, ya), yb)] += p;
          } else {
            t[BoxIndex(xa, xb, ya, d.Apply(xb, yb))] += p;
          }
        }
      }
    }
  }
  return Box::FromProbabilities(t);
}

AdviceDeviationReport IsAdviceEquilibrium(const UtilityTable& table,
                                          const Box& advice, double tol) {
  const PayoffPair base = AveragePayoffs(table, advice);
  AdviceDeviationReport report;
  for (Player p : {Player::kAlice, Player::kBob}) {
    const std::size_t idx = p == Player::kAlice ? 0 : 1;
    report.best_gain[idx] = 0.0;
    report.best_deviation[idx] = Relabeling{};
    for (int mask = 0; mask < 16; ++mask) {
      const Relabeling d{static_cast<std::uint8_t>(mask)};
      const double gain =
          AveragePayoffs(table, ApplyRelabeling(advice, p, d)).Of(p) -
          base.Of(p);
      if (gain > report.best_gain[idx]) {
        report.best_gain[idx] = gain;
        report.best_deviation[idx] = d;
      }
    }
  }
  report.is_equilibrium =
      report.best_gain[0] <= tol && report.best_gain[1] <= tol;
  return report;
}

}  // namespace nlgames
