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

// Advantage predicates for advice boxes, the singlet POVM feasibility scan,
// best-response and social-optimum searches over measurement angles, and
// closed-form payoff families for specific measurement settings.

#ifndef NLGAMES_ANALYSIS_HPP_
#define NLGAMES_ANALYSIS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlgames/box.hpp"
#include "nlgames/game.hpp"
#include "nlgames/quantum.hpp"
#include "nlgames/types.hpp"

namespace nlgames {

// Classical equilibrium payoffs of G(1/2, 1).
inline constexpr PayoffPair kFairEquilibrium{9.0 / 16.0, 9.0 / 16.0};
inline constexpr PayoffPair kUnfairToBEquilibrium{11.0 / 16.0, 7.0 / 16.0};
inline constexpr PayoffPair kUnfairToAEquilibrium{7.0 / 16.0, 11.0 / 16.0};

// ---------------------------------------------------------------------------
// Advantage predicates (game G(1/2, 1)).

struct FairAdvantage {
  bool advantageous = false;  // fair and B > 2
  bool fair = false;          // K == 3 within tolerance
  double chsh = 0.0;
  double k = 0.0;
  double fair_payoff = 0.0;  // (3/8)(1 + B/4), each player's payoff if fair
};

FairAdvantage EvaluateFairAdvantage(const CanonicalBox& c, double tol = 1e-9);

enum class UnfairSide { kUnfairToB, kUnfairToA };

// Margins F_i(box) - F_i(equilibrium).
struct AdvantageMargins {
  double alice = 0.0;
  double bob = 0.0;
};

struct AdvantageVerdict {
  bool beats_fair = false;
  bool beats_unfair_to_b = false;
  bool beats_unfair_to_a = false;
  AdvantageMargins fair;
  AdvantageMargins unfair_to_b;
  AdvantageMargins unfair_to_a;
};

// Flags from the (B, K) inequalities, margins from the closed-form payoffs.
AdvantageVerdict EvaluateAdvantage(const CanonicalBox& c);

// Raw inequalities against one unfair equilibrium:
//   to B: (3/2)B + K > 8 and (3/2)B - K > -2,
//   to A: (3/2)B + K > 4 and (3/2)B - K > 2.
struct UnfairConditions {
  double first_lhs = 0.0;   // (3/2)B + K
  double second_lhs = 0.0;  // (3/2)B - K
  bool satisfied = false;
};

UnfairConditions UnfairAdvantage(const CanonicalBox& c, UnfairSide side);

// ---------------------------------------------------------------------------
// Singlet with the general two-outcome POVM (alpha, mu) on every measurement:
// B = 2(alpha - 1)^2 + mu^2 B_S, K = 3 alpha.

struct PovmConditions {
  double ellipse_lhs = 0.0;    // (a-1/2)^2/(23/12) + 6 B_S mu^2 / 23
  double hyperbola_lhs = 0.0;  // (a-3/2)^2/(7/12) + 6 B_S mu^2 / 7
  double margin_first = 0.0;   // (3/2)B + K - 8
  double margin_second = 0.0;  // (3/2)B - K + 2
};

PovmConditions PovmConditionValues(double alpha, double mu, double bs);

struct ScanGrid {
  double alpha_step = 1e-3;
  double mu_step = 1e-3;
  double bs_step = 1e-2;
  // alpha runs over (0, alpha_max]. Beyond 2 the POVM is inadmissible; mu = 0
  // is still scanned there.
  double alpha_max = 2.0;
  // If false, mu runs over [0, mu_max] for every alpha.
  bool enforce_admissibility = true;
  double mu_max = 1.0;
  // Explicit B_S values; empty means the grid over [-2 sqrt 2, 2 sqrt 2].
  std::vector<double> bs_values;
  int threads = 0;
};

struct ScanPoint {
  double alpha = 0.0;
  double mu = 0.0;
  double bs = 0.0;
};

struct ScanResult {
  ScanGrid grid;
  std::vector<ScanPoint> feasible_points;  // every grid point meeting both
  double max_min_margin = 0.0;  // max over the grid of min(margin1, margin2)
  ScanPoint argmax;
  std::uint64_t points_scanned = 0;
};

ScanResult PovmSingletScan(const ScanGrid& grid = {});

// ---------------------------------------------------------------------------
// Searches over measurement angles.

struct SearchConfig {
  int restarts = 64;  // uniformly random starts, on top of fixed seeds
  double f_tol = 1e-8;
  int max_evaluations = 4000;  // per local search
  std::uint64_t seed = 0;
  // Also search the deviator's POVM parameters (alpha, mu).
  bool include_povm = false;
  int threads = 0;
};

struct OptimizationResult {
  // Best response: (theta0, phi0, theta1, phi1[, alpha, mu]) of the deviator.
  // Social optimum: Alice's four angles followed by Bob's.
  std::vector<double> best_params;
  double best_value = 0.0;
  PayoffPair payoffs;
  int evaluations = 0;
  bool converged = false;
};

// Maximizes |player|'s payoff over its own measurement angles with the state
// and the other player's measurements fixed.
OptimizationResult BestResponse(const QuantumStrategy& strategy,
                                const GameParams& game, Player player,
                                const SearchConfig& config = {});

// The strategy with |player|'s measurements replaced by |params| in the
// BestResponse layout.
QuantumStrategy WithPlayerParams(const QuantumStrategy& strategy, Player player,
                                 std::span<const double> params);

struct QuantumEquilibriumReport {
  bool is_equilibrium = false;
  PayoffPair current;
  double gain_alice = 0.0;
  double gain_bob = 0.0;
  OptimizationResult alice;
  OptimizationResult bob;
};

QuantumEquilibriumReport CheckQuantumEquilibrium(const QuantumStrategy& strategy,
                                                 const GameParams& game,
                                                 double tol = 1e-4,
                                                 const SearchConfig& config = {});

bool IsQuantumEquilibrium(const QuantumStrategy& strategy, const GameParams& game,
                          double tol = 1e-4, const SearchConfig& config = {});

struct SocialOptimumResult {
  OptimizationResult optimum;
  // Reference: payoffs of the pure pair (Const0, Identity) in |game|.
  PayoffPair reference;
  // Whether some run ending within 1e-6 of the optimum beats |reference| for
  // both players; the one with the largest smaller margin is kept.
  bool found_advantageous = false;
  std::vector<double> advantageous_params;
  PayoffPair advantageous_payoffs;
};

// Maximizes F_A + F_B over all eight measurement angles for a fixed state.
SocialOptimumResult SocialOptimum(const TwoQubitState& state,
                                  const GameParams& game,
                                  const SearchConfig& config = {});

// Payoffs of a projective strategy evaluated through the Born rule.
PayoffPair StrategyPayoffs(const QuantumStrategy& strategy, const GameParams& game);

// ---------------------------------------------------------------------------
// Specific settings and their closed forms.

// a|00> + b|11> with Alice (theta, phi) = (-pi/15, pi/2), (pi/3, pi/2) and Bob
// (pi/15, -pi/2), (pi/3, pi/2).
QuantumStrategy ExampleUnfairStrategy(double a);

// Closed-form payoffs of ExampleUnfairStrategy(a) in G(1/2, 1).
PayoffPair ExamplePayoffFamily(double a);

// Bob's deviation from ExampleUnfairStrategy, (theta0, phi0, theta1, phi1).
std::array<double, 4> ExampleBobDeviation();

// Settings reaching the social optimum for a = 0.9 with both unfair-to-B
// margins positive.
QuantumStrategy ExampleSocialOptimumStrategy(double a);

// (a^2 - b^2)(q3 + s3 + 2(p3 + r3)); zero iff F_A = F_B for projective
// strategies on a|00> + b|11>.
double FairConditionProjective(double a, const ProjectiveDirections& dirs);

struct CurvePoint {
  double a = 0.0;
  PayoffPair payoffs;
};

double GisinCurveAlice(double a);
double GisinCurveBob(double a);

struct GisinCurve {
  std::vector<CurvePoint> points;
  double max_alice = 0.0;
  bool alice_below_threshold = false;  // max F_A < 11/16
};

GisinCurve EvaluateGisinCurve(std::span<const double> a_grid);

// n points a_k = k / (n + 1), k = 1..n.
std::vector<double> UniformOpenGrid(int n);

// Werner visibility where EvaluateFairAdvantage flips under ChshOptimalStrategy,
// found by bisection to |tol|.
double WernerFairThreshold(double tol = 1e-6);

}  // namespace nlgames

#endif  // NLGAMES_ANALYSIS_HPP_
