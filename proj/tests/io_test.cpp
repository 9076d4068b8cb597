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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "nlgames/error.hpp"

namespace nlgames::io {
namespace {

TEST(IoTest, Round9KeepsNineSignificantDigits) {
  EXPECT_EQ(Format9(0.70661912345), "0.706619123");
  EXPECT_EQ(Round9(1.0 / 3.0), 0.333333333);
  EXPECT_EQ(Format9(2.0), "2");
  EXPECT_EQ(Round9(Round9(0.123456789123)), Round9(0.123456789123));
}

TEST(IoTest, GameFromParamsAndFromTensors) {
  const UtilityTable t = GameFromJson(Json::parse(R"({"kappa": 0.5, "tau": 1})"));
  EXPECT_EQ(t.Utility(Player::kBob, 0, 0, 1, 1), 1.0);
  const UtilityTable back = GameFromJson(GameToJson(t));
  for (Player p : {Player::kAlice, Player::kBob}) {
    EXPECT_EQ(back.utilities(p), t.utilities(p));
  }
  EXPECT_EQ(back.prior(), t.prior());
  EXPECT_THROW(GameFromJson(Json::parse(R"({"kappa": 0.5})")), FormatError);
  EXPECT_THROW(GameFromJson(Json::parse(R"({"kappa": "x", "tau": 1})")), FormatError);
  EXPECT_THROW(GameFromJson(Json::parse(R"({"kappa": -1, "tau": 1})")), ValidationError);
  EXPECT_THROW(GameFromJson(Json::parse(R"({"uA": [1, 2], "uB": []})")), FormatError);
}

TEST(IoTest, BoxFormatsRoundTrip) {
  const Box pr = PrBox();
  const Box full = BoxFromJson(BoxToJson(pr));
  EXPECT_EQ(full.probabilities(), pr.probabilities());
  const Box canon = BoxFromJson(CanonicalToJson(ToCanonical(PrDMixture(0.3))));
  for (std::size_t k = 0; k < 16; ++k) {
    EXPECT_NEAR(canon.probabilities()[k], PrDMixture(0.3).probabilities()[k], 1e-9);
  }
  const Box parsed = BoxFromJson(Json::parse(
      R"({"format": "canonical", "m": [0.5, 0.5], "n": [0.5, 0.5], "c": [0.5, 0.5, 0.5, 0]})"));
  EXPECT_NEAR(Chsh(ToCanonical(parsed)), 4.0, 1e-12);
}

TEST(IoTest, BoxErrorsAreClassified) {
  EXPECT_THROW(BoxFromJson(Json::parse(R"({"format": "sparse"})")), FormatError);
  EXPECT_THROW(BoxFromJson(Json::parse(R"({"p": []})")), FormatError);
  EXPECT_THROW(BoxFromJson(Json::parse(R"({"format": "full", "p": [1, 2, 3]})")), FormatError);
  Json bad = BoxToJson(Box::Uniform());
  bad["p"][0] = 0.5;
  EXPECT_THROW(BoxFromJson(bad), ValidationError);
  EXPECT_THROW(
      BoxFromJson(Json::parse(
          R"({"format": "canonical", "m": [0.5, 0.5], "n": [0.5, 0.5], "c": [0.9, 0.5, 0.5, 0]})")),
      ValidationError);
}

TEST(IoTest, StatesAndStrategies) {
  const TwoQubitState pure = StateFromJson(Json::parse(R"({"pure_a": 0.9})"));
  EXPECT_NEAR((pure.rho() - TwoQubitState::Pure(0.9).rho()).norm(), 0.0, 1e-15);
  const TwoQubitState w = StateFromJson(Json::parse(R"({"werner_p": 0.5})"));
  EXPECT_NEAR((w.rho() - TwoQubitState::Werner(0.5).rho()).norm(), 0.0, 1e-15);
  EXPECT_THROW(StateFromJson(Json::parse(R"({"pure_a": 0.9, "werner_p": 1})")), FormatError);
  EXPECT_THROW(StateFromJson(Json::parse(R"({"pure_a": 1.5})")), ValidationError);
  EXPECT_THROW(StateFromJson(Json::parse(R"({"rho": [[1, 0]]})")), FormatError);

  const Json j = Json::parse(R"({
      "pure_a": 0.9,
      "alice": [[-0.20943951, 1.57079633], [1.04719755, 1.57079633]],
      "bob": [[0.20943951, -1.57079633], [1.04719755, 1.57079633]],
      "povm": {"alpha": 1.0, "mu": 0.8}})");
  const QuantumStrategy s = StrategyFromJson(j);
  ASSERT_TRUE(s.povm.has_value());
  EXPECT_EQ(s.povm->mu, 0.8);
  EXPECT_EQ(s.bob[0].phi, -1.57079633);

  // The density-matrix form written back reproduces the same box.
  const QuantumStrategy back = StrategyFromJson(StrategyToJson(s));
  const Box a = BoxFromStrategy(s);
  const Box b = BoxFromStrategy(back);
  for (std::size_t k = 0; k < 16; ++k) {
    EXPECT_NEAR(a.probabilities()[k], b.probabilities()[k], 1e-8);
  }
  Json nested = {{"state", {{"werner_p", 1.0}}}, {"alice", j["alice"]}, {"bob", j["bob"]}};
  EXPECT_NO_THROW(StrategyFromJson(nested));

  Json bad_povm = j;
  bad_povm["povm"]["mu"] = 1.5;
  EXPECT_THROW(StrategyFromJson(bad_povm), ValidationError);
  Json missing = j;
  missing.erase("bob");
  EXPECT_THROW(StrategyFromJson(missing), FormatError);
}

TEST(IoTest, FilesAndMalformedJson) {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string good = (dir / "nlgames_io_good.json").string();
  const std::string bad = (dir / "nlgames_io_bad.json").string();
  WriteTextFile(good, R"({"kappa": 2, "tau": 3})");
  WriteTextFile(bad, R"({"kappa": 2, )");
  EXPECT_EQ(ReadJsonFile(good)["tau"], 3);
  EXPECT_THROW(ReadJsonFile(bad), FormatError);
  EXPECT_THROW(ReadJsonFile((dir / "nlgames_missing_file.json").string()), FormatError);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST(IoTest, CurveCsvAndScanJson) {
  const GisinCurve c = EvaluateGisinCurve(UniformOpenGrid(3));
  const std::string csv = CurveToCsv(c);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "a,F_A,F_B");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);

  ScanGrid g;
  g.alpha_step = 0.1;
  g.mu_step = 0.1;
  g.bs_step = 0.5;
  g.alpha_max = 3.0;
  const ScanResult r = PovmSingletScan(g);
  const Json j = ScanResultToJson(r, 5);
  EXPECT_EQ(j["feasible_count"], r.feasible_points.size());
  EXPECT_LE(j["feasible_points"].size(), 5u);
  EXPECT_TRUE(j.contains("grid"));
  EXPECT_EQ(j["max_min_margin"].get<double>(), Round9(r.max_min_margin));
}

}  // namespace
}  // namespace nlgames::io
