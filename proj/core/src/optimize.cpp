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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace nlgames {
namespace {

struct Vertex {
  std::vector<double> x;
  double f;
};

// One Nelder-Mead descent from a fresh axis-aligned simplex around |x0|.
// Stops when the simplex spread in f drops below f_tol or the budget runs out.
LocalResult Descend(const Objective& f, const std::vector<double>& x0,
                    const NelderMeadOptions& opt, int budget) {
  const std::size_t n = x0.size();
  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };

  std::vector<Vertex> simplex;
  simplex.reserve(n + 1);
  simplex.push_back({x0, eval(x0)});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> x = x0;
    x[i] += opt.initial_step;
    simplex.push_back({x, eval(x)});
  }

  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
  std::vector<double> centroid(n);
  auto along = [&](double t, const std::vector<double>& worst) {
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = centroid[i] + t * (worst[i] - centroid[i]);
    }
    return x;
  };

  bool converged = false;
  while (evals < budget) {
    std::sort(simplex.begin(), simplex.end(), by_value);
    if (simplex.back().f - simplex.front().f <= opt.f_tol) {
      converged = true;
      break;
    }
    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k].x[i];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    Vertex& worst = simplex.back();
    const double best_f = simplex.front().f;
    const double second_worst_f = simplex[n - 1].f;

    std::vector<double> xr = along(-1.0, worst.x);
    const double fr = eval(xr);
    if (fr < best_f) {
      std::vector<double> xe = along(-2.0, worst.x);
      const double fe = eval(xe);
      if (fe < fr) {
        worst = {std::move(xe), fe};
      } else {
        worst = {std::move(xr), fr};
      }
      continue;
    }
    if (fr < second_worst_f) {
      worst = {std::move(xr), fr};
      continue;
    }
    // Contract outside if the reflection beat the worst point, else inside.
    const bool outside = fr < worst.f;
    std::vector<double> xc = along(outside ? -0.5 : 0.5, worst.x);
    const double fc = eval(xc);
    if (fc < (outside ? fr : worst.f)) {
      worst = {std::move(xc), fc};
      continue;
    }
    // Shrink toward the best vertex.
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        simplex[k].x[i] =
            simplex[0].x[i] + 0.5 * (simplex[k].x[i] - simplex[0].x[i]);
      }
      simplex[k].f = eval(simplex[k].x);
    }
  }
  const auto best = std::min_element(simplex.begin(), simplex.end(), by_value);
  return {best->x, best->f, evals, converged};
}

}  // namespace

LocalResult NelderMeadMinimize(const Objective& f, std::vector<double> x0,
                               const NelderMeadOptions& options) {
  LocalResult result = Descend(f, x0, options, options.max_evaluations);
  for (int r = 0; r < options.restarts_at_best && result.converged; ++r) {
    const int remaining = options.max_evaluations - result.evaluations;
    if (remaining <= static_cast<int>(x0.size()) + 1) break;
    LocalResult again = Descend(f, result.x, options, remaining);
    const bool improved = again.value < result.value - options.f_tol;
    again.evaluations += result.evaluations;
    if (again.value <= result.value) {
      result = std::move(again);
    } else {
      result.evaluations = again.evaluations;
    }
    if (!improved) break;
  }
  return result;
}

MultistartResult MultistartMinimize(const Objective& f,
                                    const std::vector<std::vector<double>>& starts,
                                    const NelderMeadOptions& options,
                                    int threads) {
  MultistartResult out;
  if (starts.empty()) return out;
  out.runs.resize(starts.size());

  unsigned workers = threads > 0 ? static_cast<unsigned>(threads)
                                 : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(starts.size()));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < starts.size(); k = next++) {
      out.runs[k] = NelderMeadMinimize(f, starts[k], options);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::size_t best = 0;
  for (std::size_t k = 0; k < out.runs.size(); ++k) {
    out.evaluations += out.runs[k].evaluations;
    if (out.runs[k].value < out.runs[best].value) best = k;
  }
  out.best = out.runs[best];
  out.converged = out.best.converged;
  return out;
}

}  // namespace nlgames
