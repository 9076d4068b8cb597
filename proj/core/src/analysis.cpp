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


#include "nlgames/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "nlgames/error.hpp"
#include "nlgames/optimize.hpp"

namespace nlgames {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr GameParams kTargetGame{0.5, 1.0};

int PlayerIndex(Player p) { return p == Player::kAlice ? 0 : 1; }

// The deviator's POVM is searched in unconstrained coordinates (u, v):
// alpha = 1 + sin u, mu = min(alpha, 2 - alpha) (1 + sin v) / 2.
POVMParams PovmFromRaw(double u, double v) {
  const double alpha = std::max(1.0 + std::sin(u), 1e-12);
  const double mu = std::min(alpha, 2.0 - alpha) * (1.0 + std::sin(v)) / 2.0;
  return {alpha, std::max(mu, 0.0)};
}

std::array<double, 2> RawFromPovm(const POVMParams& pp) {
  const double u = std::asin(std::clamp(pp.alpha - 1.0, -1.0, 1.0));
  const double cap = std::min(pp.alpha, 2.0 - pp.alpha);
  const double ratio = cap > 0.0 ? std::clamp(2.0 * pp.mu / cap - 1.0, -1.0, 1.0) : 0.0;
  return {u, std::asin(ratio)};
}

std::vector<double> PlayerAngles(const QuantumStrategy& s, Player p) {
  const auto& dirs = p == Player::kAlice ? s.alice : s.bob;
  return {dirs[0].theta, dirs[0].phi, dirs[1].theta, dirs[1].phi};
}

}  // namespace

// ---------------------------------------------------------------------------

FairAdvantage EvaluateFairAdvantage(const CanonicalBox& c, double tol) {
  FairAdvantage out;
  out.chsh = Chsh(c);
  out.k = KStatistic(c);
  out.fair = std::abs(out.k - 3.0) <= tol;
  out.advantageous = out.fair && out.chsh > 2.0;
  out.fair_payoff = 0.375 * (1.0 + out.chsh / 4.0);
  return out;
}

AdvantageVerdict EvaluateAdvantage(const CanonicalBox& c) {
  const double b = Chsh(c);
  const double k = KStatistic(c);
  const double first = 1.5 * b + k;
  const double second = 1.5 * b - k;
  const PayoffPair f = PayoffsClosedForm(kTargetGame, c);
  auto margins = [&](const PayoffPair& eq) {
    return AdvantageMargins{f.alice - eq.alice, f.bob - eq.bob};
  };
  AdvantageVerdict v;
  v.beats_fair = first > 6.0 && second > 0.0;
  v.beats_unfair_to_b = first > 8.0 && second > -2.0;
  v.beats_unfair_to_a = first > 4.0 && second > 2.0;
  v.fair = margins(kFairEquilibrium);
  v.unfair_to_b = margins(kUnfairToBEquilibrium);
  v.unfair_to_a = margins(kUnfairToAEquilibrium);
  return v;
}

UnfairConditions UnfairAdvantage(const CanonicalBox& c, UnfairSide side) {
  const double b = Chsh(c);
  const double k = KStatistic(c);
  UnfairConditions out;
  out.first_lhs = 1.5 * b + k;
  out.second_lhs = 1.5 * b - k;
  if (side == UnfairSide::kUnfairToB) {
    out.satisfied = out.first_lhs > 8.0 && out.second_lhs > -2.0;
  } else {
    out.satisfied = out.first_lhs > 4.0 && out.second_lhs > 2.0;
  }
  return out;
}

// ---------------------------------------------------------------------------

PovmConditions PovmConditionValues(double alpha, double mu, double bs) {
  PovmConditions out;
  const double mu2 = mu * mu;
  out.ellipse_lhs = (alpha - 0.5) * (alpha - 0.5) / (23.0 / 12.0) + 6.0 * bs * mu2 / 23.0;
  out.hyperbola_lhs = (alpha - 1.5) * (alpha - 1.5) / (7.0 / 12.0) + 6.0 * bs * mu2 / 7.0;
  const double b = 2.0 * (alpha - 1.0) * (alpha - 1.0) + mu2 * bs;
  const double k = 3.0 * alpha;
  out.margin_first = 1.5 * b + k - 8.0;
  out.margin_second = 1.5 * b - k + 2.0;
  return out;
}

namespace {

struct ScanRow {
  std::vector<ScanPoint> feasible;
  double best = -std::numeric_limits<double>::infinity();
  ScanPoint argmax;
  std::uint64_t count = 0;
};

std::vector<double> BsValues(const ScanGrid& grid) {
  if (!grid.bs_values.empty()) return grid.bs_values;
  const double lim = 2.0 * std::numbers::sqrt2;
  std::vector<double> out;
  const auto n = static_cast<long>(std::floor(2.0 * lim / grid.bs_step + 1e-9));
  for (long j = 0; j <= n; ++j) out.push_back(-lim + static_cast<double>(j) * grid.bs_step);
  if (out.back() < lim - 1e-12) out.push_back(lim);
  return out;
}

ScanRow ScanAlphaRow(double alpha, const ScanGrid& grid, const std::vector<double>& bs) {
  ScanRow row;
  const double upper = grid.enforce_admissibility
                           ? std::max(0.0, std::min(alpha, 2.0 - alpha))
                           : grid.mu_max;
  const auto nmu = static_cast<long>(std::floor(upper / grid.mu_step + 1e-9));
  const double b0 = 2.0 * (alpha - 1.0) * (alpha - 1.0);
  const double k = 3.0 * alpha;
  for (long l = 0; l <= nmu; ++l) {
    const double mu = static_cast<double>(l) * grid.mu_step;
    const double mu2 = mu * mu;
    for (double s : bs) {
      const double b = b0 + mu2 * s;
      const double m1 = 1.5 * b + k - 8.0;
      const double m2 = 1.5 * b - k + 2.0;
      const double m = std::min(m1, m2);
      if (m > row.best) {
        row.best = m;
        row.argmax = {alpha, mu, s};
      }
      if (m1 > 0.0 && m2 > 0.0) row.feasible.push_back({alpha, mu, s});
    }
    row.count += bs.size();
  }
  return row;
}

}  // namespace

ScanResult PovmSingletScan(const ScanGrid& grid) {
  if (!(grid.alpha_step > 0.0) || !(grid.mu_step > 0.0) || !(grid.bs_step > 0.0) ||
      !(grid.alpha_max > 0.0) || !(grid.mu_max >= 0.0)) {
    throw ValidationError("scan grid steps and bounds must be positive");
  }
  const std::vector<double> bs = BsValues(grid);
  const auto nalpha = static_cast<long>(std::floor(grid.alpha_max / grid.alpha_step + 1e-9));
  std::vector<ScanRow> rows(static_cast<std::size_t>(nalpha));

  int threads = grid.threads > 0 ? grid.threads
                                 : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, static_cast<int>(std::max<long>(nalpha, 1)));
  auto work = [&](int t) {
    for (long i = t; i < nalpha; i += threads) {
      rows[static_cast<std::size_t>(i)] =
          ScanAlphaRow(static_cast<double>(i + 1) * grid.alpha_step, grid, bs);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  ScanResult out;
  out.grid = grid;
  out.max_min_margin = -std::numeric_limits<double>::infinity();
  for (auto& row : rows) {
    if (row.best > out.max_min_margin) {
      out.max_min_margin = row.best;
      out.argmax = row.argmax;
    }
    out.points_scanned += row.count;
    out.feasible_points.insert(out.feasible_points.end(), row.feasible.begin(),
                               row.feasible.end());
  }
  return out;
}

// ---------------------------------------------------------------------------

QuantumStrategy WithPlayerParams(const QuantumStrategy& strategy, Player player,
                                 std::span<const double> params) {
  if (params.size() != 4 && params.size() != 6) {
    throw ValidationError("player parameters must have 4 or 6 entries");
  }
  QuantumStrategy s = strategy;
  auto& dirs = player == Player::kAlice ? s.alice : s.bob;
  dirs[0] = {params[0], params[1]};
  dirs[1] = {params[2], params[3]};
  if (params.size() == 6) {
    const POVMParams pp{params[4], params[5]};
    pp.Validate();
    s.player_povm[PlayerIndex(player)] = pp;
  }
  return s;
}

PayoffPair StrategyPayoffs(const QuantumStrategy& strategy, const GameParams& game) {
  return AveragePayoffs(UtilityTable::FromParams(game), BoxFromStrategy(strategy));
}

OptimizationResult BestResponse(const QuantumStrategy& strategy,
                                const GameParams& game, Player player,
                                const SearchConfig& config) {
  const UtilityTable table = UtilityTable::FromParams(game);
  const bool povm = config.include_povm;

  // Search coordinates: four angles, then (u, v) when the POVM is free.
  auto to_params = [povm](std::span<const double> x) {
    std::vector<double> p(x.begin(), x.begin() + 4);
    if (povm) {
      const POVMParams pp = PovmFromRaw(x[4], x[5]);
      p.push_back(pp.alpha);
      p.push_back(pp.mu);
    }
    return p;
  };
  const Objective f = [&](std::span<const double> x) {
    const std::vector<double> p = to_params(x);
    const PayoffPair pay =
        AveragePayoffs(table, BoxFromStrategy(WithPlayerParams(strategy, player, p)));
    return -pay.Of(player);
  };

  std::vector<std::vector<double>> starts;
  std::vector<double> incumbent = PlayerAngles(strategy, player);
  const auto raw = RawFromPovm(strategy.PovmFor(player));
  const std::array<double, 2> raw_projective = {0.0, kPi / 2.0};
  if (povm) incumbent.insert(incumbent.end(), raw.begin(), raw.end());
  starts.push_back(incumbent);
  // Fixed-direction responses: each type measures along +z or -z.
  for (double t0 : {0.0, kPi}) {
    for (double t1 : {0.0, kPi}) {
      std::vector<double> x = {t0, 0.0, t1, 0.0};
      if (povm) x.insert(x.end(), raw_projective.begin(), raw_projective.end());
      starts.push_back(std::move(x));
    }
  }
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> theta(0.0, kPi);
  std::uniform_real_distribution<double> phi(-kPi, kPi);
  for (int r = 0; r < config.restarts; ++r) {
    std::vector<double> x = {theta(rng), phi(rng), theta(rng), phi(rng)};
    if (povm) {
      x.push_back(phi(rng));
      x.push_back(phi(rng));
    }
    starts.push_back(std::move(x));
  }

  NelderMeadOptions options;
  options.f_tol = config.f_tol;
  options.max_evaluations = config.max_evaluations;
  const MultistartResult ms = MultistartMinimize(f, starts, options, config.threads);

  OptimizationResult out;
  out.best_params = to_params(ms.best.x);
  out.best_value = -ms.best.value;
  out.payoffs = AveragePayoffs(
      table, BoxFromStrategy(WithPlayerParams(strategy, player, out.best_params)));
  out.evaluations = ms.evaluations;
  out.converged = ms.converged;
  return out;
}

QuantumEquilibriumReport CheckQuantumEquilibrium(const QuantumStrategy& strategy,
                                                 const GameParams& game, double tol,
                                                 const SearchConfig& config) {
  QuantumEquilibriumReport r;
  r.current = StrategyPayoffs(strategy, game);
  r.alice = BestResponse(strategy, game, Player::kAlice, config);
  r.bob = BestResponse(strategy, game, Player::kBob, config);
  r.gain_alice = r.alice.best_value - r.current.alice;
  r.gain_bob = r.bob.best_value - r.current.bob;
  r.is_equilibrium = r.gain_alice <= tol && r.gain_bob <= tol;
  return r;
}

bool IsQuantumEquilibrium(const QuantumStrategy& strategy, const GameParams& game,
                          double tol, const SearchConfig& config) {
  return CheckQuantumEquilibrium(strategy, game, tol, config).is_equilibrium;
}

SocialOptimumResult SocialOptimum(const TwoQubitState& state, const GameParams& game,
                                  const SearchConfig& config) {
  const UtilityTable table = UtilityTable::FromParams(game);
  auto strategy_of = [&state](std::span<const double> x) {
    QuantumStrategy s;
    s.state = state;
    s.alice = {MeasDirection{x[0], x[1]}, MeasDirection{x[2], x[3]}};
    s.bob = {MeasDirection{x[4], x[5]}, MeasDirection{x[6], x[7]}};
    return s;
  };
  auto payoffs_of = [&](std::span<const double> x) {
    return AveragePayoffs(table, BoxFromStrategy(strategy_of(x)));
  };
  const Objective f = [&](std::span<const double> x) { return -payoffs_of(x).Sum(); };

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> theta(0.0, kPi);
  std::uniform_real_distribution<double> phi(-kPi, kPi);
  std::vector<std::vector<double>> starts;
  for (int r = 0; r < std::max(config.restarts, 1); ++r) {
    std::vector<double> x;
    for (int k = 0; k < 4; ++k) {
      x.push_back(theta(rng));
      x.push_back(phi(rng));
    }
    starts.push_back(std::move(x));
  }
  NelderMeadOptions options;
  options.f_tol = config.f_tol;
  options.max_evaluations = config.max_evaluations;
  const MultistartResult ms = MultistartMinimize(f, starts, options, config.threads);

  SocialOptimumResult out;
  out.optimum.best_params = ms.best.x;
  out.optimum.best_value = -ms.best.value;
  out.optimum.payoffs = payoffs_of(ms.best.x);
  out.optimum.evaluations = ms.evaluations;
  out.optimum.converged = ms.converged;
  out.reference = PurePayoffTable(table)[static_cast<std::size_t>(PureStrategy::kConst0)]
                                          [static_cast<std::size_t>(PureStrategy::kIdentity)];

  double best_margin = 0.0;
  for (const LocalResult& run : ms.runs) {
    if (-run.value < out.optimum.best_value - 1e-6) continue;
    const PayoffPair p = payoffs_of(run.x);
    const double margin = std::min(p.alice - out.reference.alice, p.bob - out.reference.bob);
    if (margin > best_margin) {
      best_margin = margin;
      out.found_advantageous = true;
      out.advantageous_params = run.x;
      out.advantageous_payoffs = p;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

QuantumStrategy ExampleUnfairStrategy(double a) {
  QuantumStrategy s;
  s.state = TwoQubitState::Pure(a);
  s.alice = {MeasDirection{-kPi / 15.0, kPi / 2.0}, MeasDirection{kPi / 3.0, kPi / 2.0}};
  s.bob = {MeasDirection{kPi / 15.0, -kPi / 2.0}, MeasDirection{kPi / 3.0, kPi / 2.0}};
  return s;
}

PayoffPair ExamplePayoffFamily(double a) {
  if (!(a > 0.0 && a < 1.0)) throw ValidationError("a must lie in (0, 1)");
  const double c = std::cos(kPi / 15.0);
  const double s = std::sin(kPi / 15.0);
  const double ab = a * std::sqrt(1.0 - a * a);
  const double shared = 0.75 * c * c + 1.5 * std::sqrt(3.0) * ab * s - 1.5 * ab * s * s +
                        45.0 / 16.0 + 9.0 * ab / 8.0;
  const double tilt = (2.0 * a * a - 1.0) / 4.0;
  return {(shared + (2.0 * a * a - 0.25) * c + tilt) / 8.0,
          (shared + (1.75 - 2.0 * a * a) * c - tilt) / 8.0};
}

std::array<double, 4> ExampleBobDeviation() { return {0.451517, -1.5708, 1.25911, 1.5708}; }

QuantumStrategy ExampleSocialOptimumStrategy(double a) {
  QuantumStrategy s;
  s.state = TwoQubitState::Pure(a);
  s.alice = {MeasDirection{0.0, -2.3636}, MeasDirection{-1.5708, 0.777996}};
  s.bob = {MeasDirection{-0.6653, -0.7780}, MeasDirection{0.6653, -0.7780}};
  return s;
}

double FairConditionProjective(double a, const ProjectiveDirections& d) {
  const double b2 = 1.0 - a * a;
  return (a * a - b2) * (d.q.z() + d.s.z() + 2.0 * (d.p.z() + d.r.z()));
}

// ---------------------------------------------------------------------------

namespace {

double GisinRoot(double a) {
  const double a2 = a * a;
  return 2.0 * std::sqrt(1.0 + 4.0 * a2 - 4.0 * a2 * a2);
}

}  // namespace

double GisinCurveAlice(double a) {
  const double a2 = a * a;
  return ((7.0 + 22.0 * a2 - 24.0 * a2 * a2) / GisinRoot(a) + 2.0 * a2 + 5.0) / 16.0;
}

double GisinCurveBob(double a) {
  const double a2 = a * a;
  return ((5.0 + 26.0 * a2 - 24.0 * a2 * a2) / GisinRoot(a) - 2.0 * a2 + 7.0) / 16.0;
}

GisinCurve EvaluateGisinCurve(std::span<const double> a_grid) {
  GisinCurve out;
  out.max_alice = -std::numeric_limits<double>::infinity();
  for (double a : a_grid) {
    if (!(a > 0.0 && a < 1.0)) throw ValidationError("curve grid must lie in (0, 1)");
    const CurvePoint p{a, {GisinCurveAlice(a), GisinCurveBob(a)}};
    out.max_alice = std::max(out.max_alice, p.payoffs.alice);
    out.points.push_back(p);
  }
  out.alice_below_threshold = !out.points.empty() && out.max_alice < 11.0 / 16.0;
  return out;
}

std::vector<double> UniformOpenGrid(int n) {
  if (n < 1) throw ValidationError("grid needs at least one point");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) out.push_back(static_cast<double>(k) / (n + 1));
  return out;
}

double WernerFairThreshold(double tol) {
  auto advantageous = [](double p) {
    const TwoQubitState w = TwoQubitState::Werner(p);
    return EvaluateFairAdvantage(ToCanonical(BoxFromStrategy(ChshOptimalStrategy(w))))
        .advantageous;
  };
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (advantageous(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace nlgames
