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

#ifndef NLGAMES_LP_HPP_
#define NLGAMES_LP_HPP_

#include <Eigen/Dense>

namespace nlgames::lp {

struct FeasibilityResult {
  bool feasible = false;
  Eigen::VectorXd x;
  double residual = 0.0;  // max |A x - b| at the returned point
  int pivots = 0;
};

// Finds x >= 0 with A x = b by the phase-one simplex method (Bland's rule, so
// it terminates on degenerate problems). Redundant equality rows are allowed.
// |tol| bounds the phase-one objective and the residual accepted as feasible.
FeasibilityResult FindFeasiblePoint(const Eigen::MatrixXd& a,
                                    const Eigen::VectorXd& b,
                                    double tol = 1e-9);

}  // namespace nlgames::lp

#endif  // NLGAMES_LP_HPP_
