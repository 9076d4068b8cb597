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


#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <exception>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "nlgames/analysis.hpp"
#include "nlgames/box.hpp"
#include "nlgames/error.hpp"
#include "nlgames/game.hpp"
#include "nlgames/io.hpp"
#include "nlgames/quantum.hpp"

namespace nlgames::cli {
namespace {

using io::Format9;
using io::Json;
using io::Round9;

std::string StrategyLabel(PureStrategy g) { return "g" + std::to_string(StrategyNumber(g)); }

std::string PairText(const PayoffPair& p) {
  return "(" + Format9(p.alice) + ", " + Format9(p.bob) + ")";
}

void EmitJson(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

GameParams ParamsOf(const RunConfig& cfg) {
  const GameParams params{cfg.kappa, cfg.tau};
  params.Validate();
  return params;
}

UtilityTable TableOf(const RunConfig& cfg) {
  if (!cfg.game_path.empty()) return io::GameFromJson(io::ReadJsonFile(cfg.game_path));
  return UtilityTable::FromParams(ParamsOf(cfg));
}

Json GameJson(const RunConfig& cfg) {
  if (!cfg.game_path.empty()) return {{"file", cfg.game_path}};
  return {{"kappa", Round9(cfg.kappa)}, {"tau", Round9(cfg.tau)}};
}

Json MarginsJson(const AdvantageMargins& m) {
  return {{"F_A", Round9(m.alice)}, {"F_B", Round9(m.bob)}};
}

Json ChshVariantsJson(const std::array<double, 8>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(Round9(x));
  return out;
}

Json ParamsJson(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(Round9(x));
  return out;
}

SearchConfig SearchOf(const RunConfig& cfg) {
  SearchConfig s;
  s.restarts = cfg.restarts;
  s.seed = cfg.seed;
  s.threads = cfg.threads;
  s.include_povm = cfg.search_povm;
  return s;
}

std::string VertexLabel(std::size_t k) {
  if (k < 16) {
    return "D(" + StrategyLabel(kAllPureStrategies[k / 4]) + "," +
           StrategyLabel(kAllPureStrategies[k % 4]) + ")";
  }
  const std::size_t r = k - 16;
  return "PR(" + std::to_string(r / 4) + "," + std::to_string((r / 2) % 2) + "," +
         std::to_string(r % 2) + ")";
}

}  // namespace

int CmdGameTable(const RunConfig& cfg, std::ostream& out) {
  const UtilityTable table = TableOf(cfg);
  const PayoffGrid grid = PurePayoffTable(table);
  const EquilibriumReport report = FindPureNash(table, cfg.tol);

  if (cfg.json) {
    Json rows = Json::array();
    for (const auto& row : grid) {
      Json r = Json::array();
      for (const PayoffPair& p : row) r.push_back(io::PayoffsToJson(p));
      rows.push_back(r);
    }
    Json eqs = Json::array();
    for (const Equilibrium& e : report.equilibria) {
      eqs.push_back({{"alice", StrategyLabel(e.alice)},
                     {"bob", StrategyLabel(e.bob)},
                     {"F_A", Round9(e.payoffs.alice)},
                     {"F_B", Round9(e.payoffs.bob)},
                     {"fairness", std::string(FairnessName(e.fairness))}});
    }
    EmitJson(out, {{"game", GameJson(cfg)}, {"payoffs", rows}, {"equilibria", eqs}});
    return kExitOk;
  }

  out << "rows: Alice's strategy, columns: Bob's; entries (F_A, F_B)\n";
  constexpr int kWidth = 26;
  out << std::setw(4) << "";
  for (PureStrategy g : kAllPureStrategies) out << std::setw(kWidth) << StrategyLabel(g);
  out << '\n';
  for (PureStrategy ga : kAllPureStrategies) {
    out << std::setw(4) << StrategyLabel(ga);
    for (PureStrategy gb : kAllPureStrategies) {
      out << std::setw(kWidth)
          << PairText(grid[static_cast<std::size_t>(ga)][static_cast<std::size_t>(gb)]);
    }
    out << '\n';
  }
  out << "pure Nash equilibria: " << report.equilibria.size() << '\n';
  for (const Equilibrium& e : report.equilibria) {
    out << "  (" << StrategyLabel(e.alice) << ", " << StrategyLabel(e.bob)
        << ") " << PairText(e.payoffs) << ' ' << FairnessName(e.fairness) << '\n';
  }
  return kExitOk;
}

int CmdPayoff(const RunConfig& cfg, std::ostream& out) {
  const UtilityTable table = TableOf(cfg);
  const Box box = io::BoxFromJson(io::ReadJsonFile(cfg.box_path));
  const CanonicalBox c = ToCanonical(box);
  const PayoffPair pay = AveragePayoffs(table, box);
  const LocalityResult loc = IsLocal(box, cfg.tol);
  const AdvantageVerdict v = EvaluateAdvantage(c);
  const FairAdvantage fair = EvaluateFairAdvantage(c, cfg.tol);
  const AdviceDeviationReport ce = IsAdviceEquilibrium(table, box, cfg.tol);

  if (cfg.json) {
    EmitJson(out, {{"game", GameJson(cfg)},
                   {"payoffs", io::PayoffsToJson(pay)},
                   {"canonical", io::CanonicalToJson(c)},
                   {"chsh", Round9(Chsh(c))},
                   {"chsh_variants", ChshVariantsJson(ChshVariants(c))},
                   {"k", Round9(KStatistic(c))},
                   {"local", loc.local},
                   {"advice_equilibrium",
                    {{"is_equilibrium", ce.is_equilibrium},
                     {"gain_A", Round9(ce.best_gain[0])},
                     {"gain_B", Round9(ce.best_gain[1])}}},
                   {"advantage",
                    {{"fair", fair.fair},
                     {"beats_fair", v.beats_fair},
                     {"beats_unfair_to_b", v.beats_unfair_to_b},
                     {"beats_unfair_to_a", v.beats_unfair_to_a},
                     {"fair_advantage", fair.advantageous},
                     {"margins",
                      {{"fair", MarginsJson(v.fair)},
                       {"unfair_to_b", MarginsJson(v.unfair_to_b)},
                       {"unfair_to_a", MarginsJson(v.unfair_to_a)}}}}}});
    return kExitOk;
  }
  out << "payoffs (F_A, F_B): " << PairText(pay) << '\n'
      << "CHSH B: " << Format9(Chsh(c)) << "   K: " << Format9(KStatistic(c)) << '\n'
      << "local: " << (loc.local ? "yes" : "no") << '\n'
      << "advice equilibrium: " << (ce.is_equilibrium ? "yes" : "no") << '\n'
      << "advantage in G(1/2, 1):\n"
      << "  over fair (9/16, 9/16):        " << (v.beats_fair ? "yes" : "no") << '\n'
      << "  over unfair to B (11/16, 7/16): " << (v.beats_unfair_to_b ? "yes" : "no") << '\n'
      << "  over unfair to A (7/16, 11/16): " << (v.beats_unfair_to_a ? "yes" : "no") << '\n'
      << "  fair box with B > 2:            " << (fair.advantageous ? "yes" : "no") << '\n';
  return kExitOk;
}

int CmdQuantum(const RunConfig& cfg, std::ostream& out) {
  const GameParams game = ParamsOf(cfg);
  const QuantumStrategy s = io::StrategyFromJson(io::ReadJsonFile(cfg.strategy_path));
  const Box box = BoxFromStrategy(s);
  const CanonicalBox c = ToCanonical(box);
  const PayoffPair pay = AveragePayoffs(UtilityTable::FromParams(game), box);
  const SearchConfig search = SearchOf(cfg);
  const QuantumEquilibriumReport eq =
      CheckQuantumEquilibrium(s, game, cfg.equilibrium_tol, search);

  Json j = {{"game", GameJson(cfg)},
            {"payoffs", io::PayoffsToJson(pay)},
            {"chsh", Round9(Chsh(c))},
            {"k", Round9(KStatistic(c))},
            {"canonical", io::CanonicalToJson(c)},
            {"equilibrium",
             {{"is_equilibrium", eq.is_equilibrium},
              {"tol", Round9(cfg.equilibrium_tol)},
              {"gain_A", Round9(eq.gain_alice)},
              {"gain_B", Round9(eq.gain_bob)}}}};
  std::ostringstream text;
  text << "payoffs (F_A, F_B): " << PairText(pay) << '\n'
       << "CHSH B: " << Format9(Chsh(c)) << "   K: " << Format9(KStatistic(c)) << '\n'
       << "quantum equilibrium (tol " << Format9(cfg.equilibrium_tol)
       << "): " << (eq.is_equilibrium ? "yes" : "no") << "   best gains A "
       << Format9(eq.gain_alice) << ", B " << Format9(eq.gain_bob) << '\n';

  if (cfg.best_response) {
    const Player p = *cfg.best_response == 'A' ? Player::kAlice : Player::kBob;
    const OptimizationResult r = BestResponse(s, game, p, search);
    j["best_response"] = {{"player", std::string(PlayerName(p))},
                          {"value", Round9(r.best_value)},
                          {"params", ParamsJson(r.best_params)},
                          {"payoffs", io::PayoffsToJson(r.payoffs)},
                          {"converged", r.converged}};
    text << "best response of " << PlayerName(p) << ": " << Format9(r.best_value)
         << "   payoffs " << PairText(r.payoffs) << '\n';
  }
  if (cfg.social_optimum) {
    const SocialOptimumResult r = SocialOptimum(s.state, game, search);
    Json so = {{"sum", Round9(r.optimum.best_value)},
               {"params", ParamsJson(r.optimum.best_params)},
               {"payoffs", io::PayoffsToJson(r.optimum.payoffs)},
               {"reference", io::PayoffsToJson(r.reference)},
               {"found_advantageous", r.found_advantageous},
               {"converged", r.optimum.converged}};
    if (r.found_advantageous) {
      so["advantageous_params"] = ParamsJson(r.advantageous_params);
      so["advantageous_payoffs"] = io::PayoffsToJson(r.advantageous_payoffs);
    }
    j["social_optimum"] = so;
    text << "social optimum F_A + F_B: " << Format9(r.optimum.best_value)
         << "   payoffs " << PairText(r.optimum.payoffs) << '\n'
         << "maximizer beating " << PairText(r.reference) << " for both: "
         << (r.found_advantageous ? PairText(r.advantageous_payoffs) : "none found") << '\n';
  }
  if (cfg.json) {
    EmitJson(out, j);
  } else {
    out << text.str();
  }
  return kExitOk;
}

int CmdScanPovm(const RunConfig& cfg, std::ostream& out) {
  ScanGrid grid;
  grid.alpha_step = cfg.grid_alpha_step;
  grid.mu_step = cfg.grid_mu_step;
  grid.bs_step = cfg.grid_bs_step;
  grid.alpha_max = cfg.grid_alpha_max;
  grid.enforce_admissibility = !cfg.grid_no_admissibility;
  grid.mu_max = cfg.grid_mu_max;
  if (cfg.grid_bs) {
    if (std::abs(*cfg.grid_bs) > 2.0 * std::sqrt(2.0) + 1e-12) {
      throw ValidationError("B_S must satisfy |B_S| <= 2 sqrt 2");
    }
    grid.bs_values = {*cfg.grid_bs};
  }
  grid.threads = cfg.threads;
  const ScanResult r = PovmSingletScan(grid);
  const Json j = io::ScanResultToJson(r, cfg.max_points);
  if (!cfg.out_path.empty()) io::WriteTextFile(cfg.out_path, j.dump(2) + "\n");

  if (cfg.json) {
    EmitJson(out, j);
  } else {
    out << "grid points scanned: " << r.points_scanned << '\n'
        << "feasible points: " << r.feasible_points.size() << '\n'
        << "max of min(margin1, margin2): " << Format9(r.max_min_margin) << " at alpha "
        << Format9(r.argmax.alpha) << ", mu " << Format9(r.argmax.mu) << ", B_S "
        << Format9(r.argmax.bs) << '\n';
  }
  return r.feasible_points.empty() ? kExitOk : kExitRegression;
}

int CmdGisinCurve(const RunConfig& cfg, std::ostream& out) {
  const std::vector<double> grid = UniformOpenGrid(cfg.grid_points);
  const GisinCurve curve = EvaluateGisinCurve(grid);
  const std::string csv = io::CurveToCsv(curve);
  if (!cfg.out_path.empty()) io::WriteTextFile(cfg.out_path, csv);

  if (cfg.csv) {
    out << csv;
  } else if (cfg.json) {
    Json pts = Json::array();
    for (const CurvePoint& p : curve.points) {
      pts.push_back({{"a", Round9(p.a)}, {"F_A", Round9(p.payoffs.alice)},
                     {"F_B", Round9(p.payoffs.bob)}});
    }
    EmitJson(out, {{"max_F_A", Round9(curve.max_alice)},
                   {"below_11_16", curve.alice_below_threshold},
                   {"points", pts}});
  } else {
    out << "points: " << curve.points.size() << '\n'
        << "max F_A: " << Format9(curve.max_alice) << " (threshold 0.6875)\n"
        << "below threshold: " << (curve.alice_below_threshold ? "yes" : "no") << '\n';
  }
  return curve.alice_below_threshold ? kExitOk : kExitRegression;
}

int CmdVertices(const RunConfig& cfg, std::ostream& out) {
  const std::vector<Box> vertices = NsVertices();
  Json arr = Json::array();
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const Box& v = vertices[k];
    const CanonicalBox c = ToCanonical(v);
    const bool local = IsLocal(v, cfg.tol).local;
    if (cfg.json) {
      Json e = io::BoxToJson(v);
      e["label"] = VertexLabel(k);
      e["chsh_variants"] = ChshVariantsJson(ChshVariants(c));
      e["local"] = local;
      arr.push_back(e);
    } else {
      out << std::left << std::setw(12) << VertexLabel(k) << std::right
          << " B = " << std::setw(3) << Format9(Chsh(c)) << "   max |CHSH| = "
          << std::setw(2) << Format9(MaxAbsChsh(v)) << "   "
          << (local ? "local" : "nonlocal") << '\n';
    }
  }
  if (cfg.json) EmitJson(out, {{"vertices", arr}});
  return kExitOk;
}

int CmdIsLocal(const RunConfig& cfg, std::ostream& out) {
  const Box box = io::BoxFromJson(io::ReadJsonFile(cfg.box_path));
  const LocalityResult r = IsLocal(box, cfg.tol);
  const double max_chsh = MaxAbsChsh(box);
  if (cfg.json) {
    Json weights = Json::object();
    for (std::size_t k = 0; k < r.weights.size(); ++k) {
      if (r.weights[k] > cfg.tol) weights[VertexLabel(k)] = Round9(r.weights[k]);
    }
    EmitJson(out, {{"local", r.local},
                   {"residual", Round9(r.residual)},
                   {"max_abs_chsh", Round9(max_chsh)},
                   {"weights", weights}});
    return kExitOk;
  }
  out << "local: " << (r.local ? "yes" : "no") << '\n'
      << "max |CHSH| over the 8 variants: " << Format9(max_chsh) << '\n';
  if (r.local) {
    out << "decomposition:\n";
    for (std::size_t k = 0; k < r.weights.size(); ++k) {
      if (r.weights[k] > cfg.tol) {
        out << "  " << Format9(r.weights[k]) << " * " << VertexLabel(k) << '\n';
      }
    }
  }
  return kExitOk;
}

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Bayesian games with no-signaling and quantum advice", "nlgames"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", cfg.json, "Emit JSON");
  app.add_option("--seed", cfg.seed, "Seed for the angle searches")
      ->envname("NLGAMES_SEED")
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "Tolerance for Nash, locality and fairness checks")
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads (0: all cores)")
      ->capture_default_str();

  auto add_game = [&cfg](CLI::App* sub) {
    sub->add_option("--kappa", cfg.kappa, "Game parameter kappa")->capture_default_str();
    sub->add_option("--tau", cfg.tau, "Game parameter tau")->capture_default_str();
  };

  CLI::App* game_table = app.add_subcommand("game-table", "Pure-strategy payoffs and Nash equilibria");
  add_game(game_table);
  game_table->add_option("--game", cfg.game_path, "Game JSON file (overrides kappa, tau)")
      ->check(CLI::ExistingFile);

  CLI::App* payoff = app.add_subcommand("payoff", "Payoffs and advantage verdicts of an advice box");
  add_game(payoff);
  payoff->add_option("--game", cfg.game_path, "Game JSON file (overrides kappa, tau)")
      ->check(CLI::ExistingFile);
  payoff->add_option("--box", cfg.box_path, "Box JSON file")->required();

  CLI::App* quantum = app.add_subcommand("quantum", "Evaluate a quantum strategy");
  add_game(quantum);
  quantum->add_option("--strategy", cfg.strategy_path, "Strategy JSON file")->required();
  std::string best_response;
  quantum->add_option("--best-response", best_response, "Search a deviation of A or B")
      ->check(CLI::IsMember({"A", "B"}));
  quantum->add_flag("--social-optimum", cfg.social_optimum, "Maximize F_A + F_B over all angles");
  quantum->add_flag("--povm", cfg.search_povm, "Let the deviator also choose (alpha, mu)");
  quantum->add_option("--restarts", cfg.restarts, "Random restarts per search")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  quantum->add_option("--eq-tol", cfg.equilibrium_tol, "Gain tolerance of the equilibrium check")
      ->capture_default_str();

  CLI::App* scan = app.add_subcommand("scan-povm", "Grid scan of the singlet POVM conditions");
  scan->add_option("--grid-alpha-step", cfg.grid_alpha_step)->capture_default_str();
  scan->add_option("--grid-mu-step", cfg.grid_mu_step)->capture_default_str();
  scan->add_option("--grid-bs-step", cfg.grid_bs_step)->capture_default_str();
  scan->add_option("--grid-alpha-max", cfg.grid_alpha_max, "Upper end of alpha")
      ->capture_default_str();
  scan->add_flag("--grid-no-admissibility", cfg.grid_no_admissibility,
                 "Scan mu over [0, mu-max] regardless of alpha");
  scan->add_option("--grid-mu-max", cfg.grid_mu_max)->capture_default_str();
  scan->add_option("--grid-bs", cfg.grid_bs, "Scan a single B_S value");
  scan->add_option("--max-points", cfg.max_points, "Feasible points listed in the JSON")
      ->capture_default_str();
  scan->add_option("--out", cfg.out_path, "Write the JSON report here");

  CLI::App* curve = app.add_subcommand("gisin-curve", "Payoff curve for the maximal-violation settings");
  curve->add_option("--grid-points", cfg.grid_points, "Points a = k/(n+1)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  curve->add_flag("--csv", cfg.csv, "Emit CSV (a,F_A,F_B)");
  curve->add_option("--out", cfg.out_path, "Write the CSV here");

  app.add_subcommand("vertices", "The 24 vertices of the no-signaling polytope");

  CLI::App* is_local = app.add_subcommand("is-local", "Locality test by linear programming");
  is_local->add_option("--box", cfg.box_path, "Box JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!best_response.empty()) cfg.best_response = best_response[0];
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (cfg.subcommand == "game-table") return CmdGameTable(cfg, out);
    if (cfg.subcommand == "payoff") return CmdPayoff(cfg, out);
    if (cfg.subcommand == "quantum") return CmdQuantum(cfg, out);
    if (cfg.subcommand == "scan-povm") return CmdScanPovm(cfg, out);
    if (cfg.subcommand == "gisin-curve") return CmdGisinCurve(cfg, out);
    if (cfg.subcommand == "vertices") return CmdVertices(cfg, out);
    if (cfg.subcommand == "is-local") return CmdIsLocal(cfg, out);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace nlgames::cli
