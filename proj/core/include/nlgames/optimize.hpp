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

// Derivative-free local minimization (Nelder-Mead) and a multistart driver.

#ifndef NLGAMES_OPTIMIZE_HPP_
#define NLGAMES_OPTIMIZE_HPP_

#include <functional>
#include <span>
#include <vector>

namespace nlgames {

using Objective = std::function<double(std::span<const double>)>;

struct NelderMeadOptions {
  double initial_step = 0.6;
  // Converged once the spread of objective values over the simplex is below
  // this.
  double f_tol = 1e-8;
  int max_evaluations = 4000;
  // Rebuild the simplex around the incumbent after convergence this many
  // times; guards against a collapsed simplex stopping short.
  int restarts_at_best = 2;
};

struct LocalResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

LocalResult NelderMeadMinimize(const Objective& f, std::vector<double> x0,
                               const NelderMeadOptions& options = {});

struct MultistartResult {
  LocalResult best;
  std::vector<LocalResult> runs;  // in start order
  int evaluations = 0;
  bool converged = false;  // true iff the best run converged
};

// Runs one local search per start, possibly on several threads. Runs are
// merged in start order (ties keep the earlier start), so the result does not
// depend on scheduling. |threads| <= 0 means hardware concurrency.
MultistartResult MultistartMinimize(const Objective& f,
                                    const std::vector<std::vector<double>>& starts,
                                    const NelderMeadOptions& options = {},
                                    int threads = 0);

}  // namespace nlgames

#endif  // NLGAMES_OPTIMIZE_HPP_
