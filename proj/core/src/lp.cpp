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

#include "nlgames/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace nlgames::lp {

FeasibilityResult FindFeasiblePoint(const Eigen::MatrixXd& a,
                                    const Eigen::VectorXd& b, double tol) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  const Eigen::Index rhs = cols + rows;
  constexpr double kPivotEps = 1e-12;

  // Tableau [A | I | b] with every row flipped to b >= 0; artificials start
  // in the basis.
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(rows, cols + rows + 1);
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(rows));
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double sign = b(i) < 0.0 ? -1.0 : 1.0;
    t.row(i).head(cols) = sign * a.row(i);
    t(i, cols + i) = 1.0;
    t(i, rhs) = sign * b(i);
    basis[static_cast<std::size_t>(i)] = cols + i;
  }

  // Reduced costs of the phase-one objective sum(artificials).
  Eigen::RowVectorXd cost = Eigen::RowVectorXd::Zero(cols + rows + 1);
  for (Eigen::Index i = 0; i < rows; ++i) cost -= t.row(i);
  for (Eigen::Index i = 0; i < rows; ++i) cost(cols + i) = 0.0;

  FeasibilityResult result;
  const int max_pivots = 50 * static_cast<int>(rows + cols) + 100;
  while (result.pivots < max_pivots) {
    // Bland: smallest improving column. Artificials never re-enter.
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (cost(j) < -kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    Eigen::Index leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (t(i, enter) > kPivotEps) {
        const double ratio = t(i, rhs) / t(i, enter);
        bool take = leave < 0 || ratio < best_ratio - kPivotEps;
        if (!take && std::abs(ratio - best_ratio) <= kPivotEps) {
          take = basis[static_cast<std::size_t>(i)] <
                 basis[static_cast<std::size_t>(leave)];
        }
        if (take) {
          best_ratio = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) break;  // unbounded direction; cannot happen in phase one

    t.row(leave) /= t(leave, enter);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i != leave && t(i, enter) != 0.0) {
        t.row(i) -= t(i, enter) * t.row(leave);
      }
    }
    cost -= cost(enter) * t.row(leave);
    basis[static_cast<std::size_t>(leave)] = enter;
    ++result.pivots;
  }

  result.x = Eigen::VectorXd::Zero(cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Eigen::Index j = basis[static_cast<std::size_t>(i)];
    if (j < cols) result.x(j) = std::max(t(i, rhs), 0.0);
  }
  result.residual = (a * result.x - b).cwiseAbs().maxCoeff();
  const double phase_one_value = -cost(rhs);
  result.feasible = phase_one_value <= tol && result.residual <= tol;
  return result;
}

}  // namespace nlgames::lp
