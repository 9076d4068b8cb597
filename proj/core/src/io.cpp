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


#include "nlgames/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "nlgames/error.hpp"

namespace nlgames::io {
namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field '") + key + "'");
  return *it;
}

double Number(const Json& j, const std::string& what) {
  if (!j.is_number()) throw FormatError(what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw FormatError(what + " must be finite");
  return v;
}

template <std::size_t N>
std::array<double, N> NumberArray(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != N) {
    throw FormatError(what + " must be an array of " + std::to_string(N) + " numbers");
  }
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = Number(j[i], what);
  return out;
}

template <std::size_t N>
Json RoundedArray(const std::array<double, N>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(Round9(x));
  return out;
}

std::array<MeasDirection, 2> Directions(const Json& j, const std::string& who) {
  if (!j.is_array() || j.size() != 2) {
    throw FormatError(who + " must hold two [theta, phi] pairs");
  }
  std::array<MeasDirection, 2> out{};
  for (std::size_t i = 0; i < 2; ++i) {
    const auto a = NumberArray<2>(j[i], who + " angles");
    out[i] = {a[0], a[1]};
  }
  return out;
}

Json DirectionsToJson(const std::array<MeasDirection, 2>& d) {
  return Json::array({Json::array({Round9(d[0].theta), Round9(d[0].phi)}),
                      Json::array({Round9(d[1].theta), Round9(d[1].phi)})});
}

}  // namespace

double Round9(double v) {
  if (!std::isfinite(v)) return v;
  return std::stod(Format9(v));
}

std::string Format9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw FormatError("malformed JSON in '" + path + "': " + e.what());
  }
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
}

UtilityTable GameFromJson(const Json& j) {
  if (!j.is_object()) throw FormatError("game must be a JSON object");
  if (j.contains("kappa") || j.contains("tau")) {
    const GameParams params{Number(Field(j, "kappa"), "kappa"), Number(Field(j, "tau"), "tau")};
    return UtilityTable::FromParams(params);
  }
  const auto ua = NumberArray<16>(Field(j, "uA"), "uA");
  const auto ub = NumberArray<16>(Field(j, "uB"), "uB");
  const auto prior = j.contains("prior") ? NumberArray<4>(j["prior"], "prior")
                                         : UtilityTable::kUniformPrior;
  return UtilityTable(ua, ub, prior);
}

Json GameToJson(const UtilityTable& table) {
  return {{"uA", RoundedArray(table.utilities(Player::kAlice))},
          {"uB", RoundedArray(table.utilities(Player::kBob))},
          {"prior", RoundedArray(table.prior())}};
}

Box BoxFromJson(const Json& j) {
  const Json& format = Field(j, "format");
  if (!format.is_string()) throw FormatError("box format must be a string");
  const std::string f = format.get<std::string>();
  if (f == "full") return Box::FromProbabilities(NumberArray<16>(Field(j, "p"), "p"));
  if (f == "canonical") {
    CanonicalBox c;
    c.m = NumberArray<2>(Field(j, "m"), "m");
    c.n = NumberArray<2>(Field(j, "n"), "n");
    c.c = NumberArray<4>(Field(j, "c"), "c");
    return FromCanonical(c);
  }
  throw FormatError("unknown box format '" + f + "'");
}

Json BoxToJson(const Box& box) {
  return {{"format", "full"}, {"p", RoundedArray(box.probabilities())}};
}

Json CanonicalToJson(const CanonicalBox& c) {
  return {{"format", "canonical"},
          {"m", RoundedArray(c.m)},
          {"n", RoundedArray(c.n)},
          {"c", RoundedArray(c.c)}};
}

TwoQubitState StateFromJson(const Json& j) {
  if (!j.is_object()) throw FormatError("state must be a JSON object");
  const int kinds = static_cast<int>(j.contains("pure_a")) +
                    static_cast<int>(j.contains("werner_p")) +
                    static_cast<int>(j.contains("rho"));
  if (kinds != 1) throw FormatError("state needs exactly one of pure_a, werner_p, rho");
  if (j.contains("pure_a")) return TwoQubitState::Pure(Number(j["pure_a"], "pure_a"));
  if (j.contains("werner_p")) return TwoQubitState::Werner(Number(j["werner_p"], "werner_p"));
  const Json& rho = j["rho"];
  if (!rho.is_array() || rho.size() != 16) {
    throw FormatError("rho must hold 16 [re, im] pairs in row-major order");
  }
  Matrix4c m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const auto z = NumberArray<2>(rho[static_cast<std::size_t>(4 * r + c)], "rho entry");
      m(r, c) = {z[0], z[1]};
    }
  }
  return TwoQubitState::FromDensityMatrix(m);
}

QuantumStrategy StrategyFromJson(const Json& j) {
  if (!j.is_object()) throw FormatError("strategy must be a JSON object");
  QuantumStrategy s;
  s.state = StateFromJson(j.contains("state") ? j["state"] : j);
  s.alice = Directions(Field(j, "alice"), "alice");
  s.bob = Directions(Field(j, "bob"), "bob");
  if (j.contains("povm")) {
    const Json& p = j["povm"];
    const POVMParams pp{Number(Field(p, "alpha"), "alpha"), Number(Field(p, "mu"), "mu")};
    pp.Validate();
    s.povm = pp;
  }
  return s;
}

Json StrategyToJson(const QuantumStrategy& s) {
  Json rho = Json::array();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      rho.push_back(Json::array({Round9(s.state.rho()(r, c).real()),
                                 Round9(s.state.rho()(r, c).imag())}));
    }
  }
  Json out = {{"rho", rho},
              {"alice", DirectionsToJson(s.alice)},
              {"bob", DirectionsToJson(s.bob)}};
  if (s.povm) out["povm"] = {{"alpha", Round9(s.povm->alpha)}, {"mu", Round9(s.povm->mu)}};
  return out;
}

Json PayoffsToJson(const PayoffPair& p) {
  return {{"F_A", Round9(p.alice)}, {"F_B", Round9(p.bob)}};
}

Json ScanResultToJson(const ScanResult& r, std::size_t max_points) {
  Json points = Json::array();
  for (std::size_t i = 0; i < r.feasible_points.size() && i < max_points; ++i) {
    const ScanPoint& p = r.feasible_points[i];
    points.push_back({Round9(p.alpha), Round9(p.mu), Round9(p.bs)});
  }
  const ScanGrid& g = r.grid;
  Json grid = {{"alpha_step", Round9(g.alpha_step)},
               {"mu_step", Round9(g.mu_step)},
               {"bs_step", Round9(g.bs_step)},
               {"alpha_max", Round9(g.alpha_max)},
               {"enforce_admissibility", g.enforce_admissibility},
               {"points_scanned", r.points_scanned}};
  if (!g.enforce_admissibility) grid["mu_max"] = Round9(g.mu_max);
  return {{"grid", grid},
          {"max_min_margin", Round9(r.max_min_margin)},
          {"argmax", {Round9(r.argmax.alpha), Round9(r.argmax.mu), Round9(r.argmax.bs)}},
          {"feasible_count", r.feasible_points.size()},
          {"feasible_points", points}};
}

std::string CurveToCsv(const GisinCurve& curve) {
  std::ostringstream out;
  out << "a,F_A,F_B\n";
  for (const CurvePoint& p : curve.points) {
    out << Format9(p.a) << ',' << Format9(p.payoffs.alice) << ','
        << Format9(p.payoffs.bob) << '\n';
  }
  return out.str();
}

}  // namespace nlgames::io
