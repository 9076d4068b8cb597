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


#include "nlgames/optimize.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace nlgames {
namespace {

double Rosenbrock(std::span<const double> x) {
  return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
}

TEST(NelderMeadTest, MinimizesAQuadratic) {
  const Objective f = [](std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (i + 1.0) * std::pow(x[i] - 0.5 * i, 2);
    return s;
  };
  NelderMeadOptions opt;
  opt.f_tol = 1e-14;
  opt.max_evaluations = 20000;
  const LocalResult r = NelderMeadMinimize(f, {3.0, -2.0, 1.0, 4.0}, opt);
  EXPECT_TRUE(r.converged);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(r.x[i], 0.5 * i, 1e-5);
  EXPECT_NEAR(r.value, f(r.x), 0.0);
}

TEST(NelderMeadTest, MinimizesRosenbrock) {
  NelderMeadOptions opt;
  opt.f_tol = 1e-16;
  opt.max_evaluations = 20000;
  const LocalResult r = NelderMeadMinimize(Rosenbrock, {-1.2, 1.0}, opt);
  EXPECT_NEAR(r.x[0], 1.0, 1e-4);
  EXPECT_NEAR(r.x[1], 1.0, 1e-4);
}

TEST(NelderMeadTest, ReportsBudgetExhaustion) {
  NelderMeadOptions opt;
  opt.f_tol = 1e-30;
  opt.max_evaluations = 30;
  const LocalResult r = NelderMeadMinimize(Rosenbrock, {-1.2, 1.0}, opt);
  EXPECT_FALSE(r.converged);
  EXPECT_LE(r.evaluations, 30 + 3);
  EXPECT_NEAR(r.value, Rosenbrock(r.x), 0.0);
}

TEST(MultistartTest, FindsTheGlobalMinimumOfAMultimodalFunction) {
  // Minima near multiples of 2 pi shifted; the global one sits at x = 3.
  const Objective f = [](std::span<const double> x) {
    return 0.05 * std::pow(x[0] - 3.0, 2) - std::cos(2.0 * (x[0] - 3.0));
  };
  std::vector<std::vector<double>> starts;
  for (double s = -10.0; s <= 10.0; s += 1.0) starts.push_back({s});
  const MultistartResult r = MultistartMinimize(f, starts);
  EXPECT_NEAR(r.best.x[0], 3.0, 1e-3);
  EXPECT_EQ(r.runs.size(), starts.size());
  int total = 0;
  for (const auto& run : r.runs) total += run.evaluations;
  EXPECT_EQ(total, r.evaluations);
}

TEST(MultistartTest, ResultDoesNotDependOnThreadCount) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<std::vector<double>> starts;
  for (int k = 0; k < 24; ++k) starts.push_back({u(rng), u(rng)});
  const Objective f = [](std::span<const double> x) {
    return std::sin(3 * x[0]) * std::cos(2 * x[1]) + 0.1 * (x[0] * x[0] + x[1] * x[1]);
  };
  const MultistartResult one = MultistartMinimize(f, starts, {}, 1);
  const MultistartResult four = MultistartMinimize(f, starts, {}, 4);
  EXPECT_EQ(one.best.x, four.best.x);
  EXPECT_EQ(one.best.value, four.best.value);
  ASSERT_EQ(one.runs.size(), four.runs.size());
  for (std::size_t k = 0; k < one.runs.size(); ++k) EXPECT_EQ(one.runs[k].x, four.runs[k].x);
}

}  // namespace
}  // namespace nlgames
