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

#include "nlgames/box.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

#include "nlgames/error.hpp"
#include "nlgames/lp.hpp"

namespace nlgames {
namespace {

std::string SettingName(int xa, int xb) {
  std::ostringstream os;
  os << "(x_A=" << xa << ",x_B=" << xb << ")";
  return os.str();
}

}  // namespace

Box Box::FromProbabilities(const Table& p) {
  Table q = p;
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (!std::isfinite(q[k])) {
      throw ValidationError("box entry " + std::to_string(k) + " is not finite");
    }
    if (q[k] < -kNegativityTol) {
      std::ostringstream os;
      os << "positivity violated: entry " << k << " = " << q[k];
      throw ValidationError(os.str());
    }
    q[k] = std::max(q[k], 0.0);
  }
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      double s = 0.0;
      for (int y = 0; y < 4; ++y) s += q[BoxIndex(xa, xb, y >> 1, y & 1)];
      if (std::abs(s - 1.0) > kNormalizationTol) {
        std::ostringstream os;
        os << "normalization violated at setting " << SettingName(xa, xb)
           << ": sum = " << s;
        throw ValidationError(os.str());
      }
    }
  }
  // No-signaling: Alice's '+' marginal must not depend on x_B, Bob's on x_A.
  for (int i = 0; i < 2; ++i) {
    const double a0 = q[BoxIndex(i, 0, 0, 0)] + q[BoxIndex(i, 0, 0, 1)];
    const double a1 = q[BoxIndex(i, 1, 0, 0)] + q[BoxIndex(i, 1, 0, 1)];
    if (std::abs(a0 - a1) > kSignalingTol) {
      std::ostringstream os;
      os << "no-signaling violated: Alice's marginal for x_A=" << i
         << " depends on x_B (" << a0 << " vs " << a1 << ")";
      throw ValidationError(os.str());
    }
    const double b0 = q[BoxIndex(0, i, 0, 0)] + q[BoxIndex(0, i, 1, 0)];
    const double b1 = q[BoxIndex(1, i, 0, 0)] + q[BoxIndex(1, i, 1, 0)];
    if (std::abs(b0 - b1) > kSignalingTol) {
      std::ostringstream os;
      os << "no-signaling violated: Bob's marginal for x_B=" << i
         << " depends on x_A (" << b0 << " vs " << b1 << ")";
      throw ValidationError(os.str());
    }
  }

  // Project onto the no-signaling subspace: keep P(++|ij), average the
  // marginals and rebuild each setting.
  CanonicalBox c;
  for (int i = 0; i < 2; ++i) {
    c.m[i] = 0.5 * (q[BoxIndex(i, 0, 0, 0)] + q[BoxIndex(i, 0, 0, 1)] +
                    q[BoxIndex(i, 1, 0, 0)] + q[BoxIndex(i, 1, 0, 1)]);
    c.n[i] = 0.5 * (q[BoxIndex(0, i, 0, 0)] + q[BoxIndex(0, i, 1, 0)] +
                    q[BoxIndex(1, i, 0, 0)] + q[BoxIndex(1, i, 1, 0)]);
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      // Normalize the setting first so the rebuilt '--' entry stays put.
      double s = 0.0;
      for (int y = 0; y < 4; ++y) s += q[BoxIndex(i, j, y >> 1, y & 1)];
      c.c[2 * i + j] = q[BoxIndex(i, j, 0, 0)] / s;
    }
  }
  Table out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double cij = c.C(i, j);
      out[BoxIndex(i, j, 0, 0)] = cij;
      out[BoxIndex(i, j, 0, 1)] = c.m[i] - cij;
      out[BoxIndex(i, j, 1, 0)] = c.n[j] - cij;
      out[BoxIndex(i, j, 1, 1)] = 1.0 - c.m[i] - c.n[j] + cij;
    }
  }
  for (double& v : out) v = std::max(v, 0.0);
  return Box(out);
}

Box Box::Uniform() {
  Table t;
  t.fill(0.25);
  return Box(t);
}

double Box::AliceMarginal(int xa, int ya) const {
  return p_[BoxIndex(xa, 0, ya, 0)] + p_[BoxIndex(xa, 0, ya, 1)];
}

double Box::BobMarginal(int xb, int yb) const {
  return p_[BoxIndex(0, xb, 0, yb)] + p_[BoxIndex(0, xb, 1, yb)];
}

double Box::Correlator(int xa, int xb) const {
  return p_[BoxIndex(xa, xb, 0, 0)] - p_[BoxIndex(xa, xb, 0, 1)] -
         p_[BoxIndex(xa, xb, 1, 0)] + p_[BoxIndex(xa, xb, 1, 1)];
}

Box Mixture(std::span<const double> weights, std::span<const Box> boxes) {
  if (weights.size() != boxes.size() || boxes.empty()) {
    throw ValidationError("mixture needs one weight per box");
  }
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw ValidationError("mixture weight is negative");
    total += w;
  }
  if (std::abs(total - 1.0) > Box::kNormalizationTol) {
    throw ValidationError("mixture weights do not sum to 1");
  }
  Box::Table t{};
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    for (std::size_t e = 0; e < t.size(); ++e) {
      t[e] += weights[k] * boxes[k].p_[e];
    }
  }
  return Box(t);
}

Box Mix(double w, const Box& first, const Box& second) {
  if (w < 0.0 || w > 1.0) throw ValidationError("mixing weight outside [0, 1]");
  const std::array<double, 2> weights = {w, 1.0 - w};
  const std::array<Box, 2> boxes = {first, second};
  return Mixture(weights, boxes);
}

void CanonicalBox::Validate(double tol) const {
  auto in_unit = [tol](double v, const char* name, int idx) {
    if (!std::isfinite(v) || v < -tol || v > 1.0 + tol) {
      std::ostringstream os;
      os << "parameter " << name << idx << " = " << v << " outside [0, 1]";
      throw ValidationError(os.str());
    }
  };
  for (int i = 0; i < 2; ++i) {
    in_unit(m[i], "m", i);
    in_unit(n[i], "n", i);
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double lo = std::max(0.0, m[i] + n[j] - 1.0);
      const double hi = std::min(m[i], n[j]);
      const double v = C(i, j);
      if (!std::isfinite(v) || v < lo - tol || v > hi + tol) {
        std::ostringstream os;
        os << "positivity violated: c" << i << j << " = " << v
           << " outside [max(0, m" << i << " + n" << j << " - 1), min(m" << i
           << ", n" << j << ")] = [" << lo << ", " << hi << "]";
        throw ValidationError(os.str());
      }
    }
  }
}

CanonicalBox CanonicalBox::FromBox(const Box& box) {
  CanonicalBox c;
  for (int i = 0; i < 2; ++i) {
    c.m[i] = box.AliceMarginal(i, 0);
    c.n[i] = box.BobMarginal(i, 0);
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) c.c[2 * i + j] = box(i, j, 0, 0);
  }
  return c;
}

Box CanonicalBox::ToBox() const {
  Validate();
  Box::Table out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double cij = C(i, j);
      out[BoxIndex(i, j, 0, 0)] = cij;
      out[BoxIndex(i, j, 0, 1)] = m[i] - cij;
      out[BoxIndex(i, j, 1, 0)] = n[j] - cij;
      out[BoxIndex(i, j, 1, 1)] = 1.0 - m[i] - n[j] + cij;
    }
  }
  for (double& v : out) v = std::max(v, 0.0);
  return Box(out);
}

CanonicalBox ToCanonical(const Box& box) { return CanonicalBox::FromBox(box); }
Box FromCanonical(const CanonicalBox& c) { return c.ToBox(); }

double Chsh(const CanonicalBox& c) {
  return 2.0 + 4.0 * (c.C(0, 0) + c.C(0, 1) + c.C(1, 0) - c.C(1, 1)) -
         4.0 * (c.m[0] + c.n[0]);
}

double ChshFromCorrelators(const Box& box) {
  return box.Correlator(0, 0) + box.Correlator(0, 1) + box.Correlator(1, 0) -
         box.Correlator(1, 1);
}

namespace {

std::array<double, 8> VariantsFromCorrelators(const std::array<double, 4>& e) {
  const double total = e[0] + e[1] + e[2] + e[3];
  std::array<double, 8> out{};
  for (std::size_t k = 0; k < 4; ++k) {
    out[k] = total - 2.0 * e[k];
    out[k + 4] = -out[k];
  }
  return out;
}

}  // namespace

std::array<double, 8> ChshVariants(const Box& box) {
  return VariantsFromCorrelators({box.Correlator(0, 0), box.Correlator(0, 1),
                                  box.Correlator(1, 0), box.Correlator(1, 1)});
}

std::array<double, 8> ChshVariants(const CanonicalBox& c) {
  std::array<double, 4> e{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      e[2 * i + j] = 4.0 * c.C(i, j) - 2.0 * c.m[i] - 2.0 * c.n[j] + 1.0;
    }
  }
  return VariantsFromCorrelators(e);
}

double MaxAbsChsh(const Box& box) {
  double best = 0.0;
  for (double v : ChshVariants(box)) best = std::max(best, std::abs(v));
  return best;
}

double KStatistic(const CanonicalBox& c) {
  return 2.0 * (c.m[0] + c.n[0]) + c.m[1] + c.n[1];
}

Box DeterministicBox(PureStrategy alice, PureStrategy bob) {
  Box::Table t{};
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      t[BoxIndex(xa, xb, Apply(alice, xa), Apply(bob, xb))] = 1.0;
    }
  }
  return Box::FromProbabilities(t);
}

Box PrBox(int alpha, int beta, int gamma) {
  Box::Table t{};
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      const int parity = ((xa & xb) ^ (alpha & xa) ^ (beta & xb) ^ gamma) & 1;
      for (int ya = 0; ya < 2; ++ya) {
        t[BoxIndex(xa, xb, ya, ya ^ parity)] = 0.5;
      }
    }
  }
  return Box::FromProbabilities(t);
}

std::vector<Box> NsVertices() {
  std::vector<Box> out;
  out.reserve(24);
  for (PureStrategy ga : kAllPureStrategies) {
    for (PureStrategy gb : kAllPureStrategies) {
      out.push_back(DeterministicBox(ga, gb));
    }
  }
  for (int v = 0; v < 8; ++v) {
    out.push_back(PrBox((v >> 2) & 1, (v >> 1) & 1, v & 1));
  }
  return out;
}

Box PrDMixture(double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw ValidationError("mixture parameter q must lie in [0, 1]");
  }
  return Mix(q, PrBox(), DeterministicBox(PureStrategy::kConst0,
                                          PureStrategy::kIdentity));
}

LocalityResult IsLocal(const Box& box, double tol) {
  // Columns: deterministic boxes; rows: the 16 entries plus sum(w) = 1.
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(17, 16);
  Eigen::VectorXd b(17);
  for (int ga = 0; ga < 4; ++ga) {
    for (int gb = 0; gb < 4; ++gb) {
      const Box d = DeterministicBox(static_cast<PureStrategy>(ga),
                                     static_cast<PureStrategy>(gb));
      for (int e = 0; e < 16; ++e) a(e, 4 * ga + gb) = d.probabilities()[e];
      a(16, 4 * ga + gb) = 1.0;
    }
  }
  for (int e = 0; e < 16; ++e) b(e) = box.probabilities()[e];
  b(16) = 1.0;

  const lp::FeasibilityResult r = lp::FindFeasiblePoint(a, b, tol);
  LocalityResult out;
  out.local = r.feasible;
  out.residual = r.residual;
  if (r.feasible) {
    for (int k = 0; k < 16; ++k) out.weights[k] = std::max(r.x(k), 0.0);
  }
  return out;
}

PayoffPair PayoffsClosedForm(const GameParams& params, const CanonicalBox& c) {
  params.Validate();
  const double kappa = params.kappa;
  const double tau = params.tau;
  const double b = Chsh(c);
  const double s0 = c.m[0] + c.n[0];
  const double s1 = c.m[1] + c.n[1];
  PayoffPair out;
  out.alice = (3.0 + 1.5 * b + 2.0 * s0 + s1) / 16.0;
  out.bob = ((10.0 * tau - 2.0 * kappa) + (tau + kappa) * b +
             4.0 * (kappa - tau) * s0 + (3.0 - 4.0 * tau) * s1 +
             4.0 * (kappa + tau - 1.5) * c.C(1, 1)) /
            16.0;
  return out;
}

}  // namespace nlgames
