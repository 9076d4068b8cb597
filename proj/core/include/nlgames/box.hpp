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

// Two-party, two-setting, two-outcome (2-2-2) correlation boxes.
//
// A box holds P(y_A, y_B | x_A, x_B) with index order (x_A, x_B, y_A, y_B),
// row-major. Action 0 is identified with outcome '+' and action 1 with '-',
// so the canonical parameters below are probabilities of action 0.

#ifndef NLGAMES_BOX_HPP_
#define NLGAMES_BOX_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nlgames/types.hpp"

namespace nlgames {

inline constexpr std::size_t BoxIndex(int xa, int xb, int ya, int yb) {
  return static_cast<std::size_t>(((xa * 2 + xb) * 2 + ya) * 2 + yb);
}

class Box {
 public:
  using Table = std::array<double, 16>;

  static constexpr double kNegativityTol = 1e-12;
  static constexpr double kNormalizationTol = 1e-9;
  static constexpr double kSignalingTol = 1e-9;

  // Validates |p|. Entries in [-1e-12, 0) are clamped to zero; signaling up to
  // 1e-9 is projected away by averaging the marginals. Anything worse throws
  // ValidationError naming the violated constraint.
  static Box FromProbabilities(const Table& p);

  // P = 1/4 for every outcome and setting.
  static Box Uniform();

  double operator()(int xa, int xb, int ya, int yb) const {
    return p_[BoxIndex(xa, xb, ya, yb)];
  }
  const Table& probabilities() const { return p_; }

  // P(y_A | x_A) and P(y_B | x_B); well defined because the box is
  // no-signaling.
  double AliceMarginal(int xa, int ya) const;
  double BobMarginal(int xb, int yb) const;

  // <x_A x_B> = P(++) - P(+-) - P(-+) + P(--).
  double Correlator(int xa, int xb) const;

 private:
  explicit Box(const Table& p) : p_(p) {}
  friend Box Mixture(std::span<const double>, std::span<const Box>);
  friend class CanonicalBox;

  Table p_{};
};

// Convex combination sum_k w_k B_k. Weights must be nonnegative and sum to 1.
Box Mixture(std::span<const double> weights, std::span<const Box> boxes);
Box Mix(double w, const Box& first, const Box& second);

// Eight-parameter form of a no-signaling box: Alice's '+' marginals m_i,
// Bob's '+' marginals n_j and the joint '++' probabilities c_ij.
class CanonicalBox {
 public:
  std::array<double, 2> m{};
  std::array<double, 2> n{};
  std::array<double, 4> c{};  // c[2 * i + j]

  double C(int i, int j) const { return c[static_cast<std::size_t>(2 * i + j)]; }

  // Throws ValidationError when a parameter leaves [0, 1] or a c_ij leaves
  // [max(0, m_i + n_j - 1), min(m_i, n_j)].
  void Validate(double tol = 1e-12) const;

  static CanonicalBox FromBox(const Box& box);
  Box ToBox() const;
};

CanonicalBox ToCanonical(const Box& box);
Box FromCanonical(const CanonicalBox& c);

// B = 2 + 4(c00 + c01 + c10 - c11) - 4(m0 + n0).
double Chsh(const CanonicalBox& c);
// B = <00> + <01> + <10> - <11>, computed from the full table.
double ChshFromCorrelators(const Box& box);

// All eight CHSH expressions obtained by moving the minus sign (index k =
// 2i + j of the negated correlator) and by flipping the overall sign
// (indices 4..7 are the negations of 0..3). Variant 3 equals Chsh().
std::array<double, 8> ChshVariants(const Box& box);
std::array<double, 8> ChshVariants(const CanonicalBox& c);
double MaxAbsChsh(const Box& box);

// K = 2(m0 + n0) + m1 + n1, in [0, 6].
double KStatistic(const CanonicalBox& c);

// Deterministic box of the pure strategy pair (g_A, g_B).
Box DeterministicBox(PureStrategy alice, PureStrategy bob);

// Extremal nonlocal box with a XOR b = x_A x_B XOR alpha x_A XOR beta x_B
// XOR gamma (a, b are action bits).
Box PrBox(int alpha = 0, int beta = 0, int gamma = 0);

// The 24 vertices of the 2-2-2 no-signaling polytope: the 16 deterministic
// boxes in order (g_A, g_B) = 4 * g_A + g_B, then the 8 PR relabelings
// ordered by 4 * alpha + 2 * beta + gamma.
std::vector<Box> NsVertices();

// q * PR + (1 - q) * D, where D is the deterministic box of (Const0,
// Identity). Requires q in [0, 1].
Box PrDMixture(double q);

struct LocalityResult {
  bool local = false;
  // Weights over DeterministicBox(g_A, g_B) at index 4 * g_A + g_B.
  std::array<double, 16> weights{};
  double residual = 0.0;
};

// Linear feasibility P = sum_l w_l D_l, w >= 0, sum w = 1 over the 16
// deterministic boxes.
LocalityResult IsLocal(const Box& box, double tol = 1e-9);

// Closed-form payoffs of G(kappa, tau) under a no-signaling advice box
// (uniform prior).
PayoffPair PayoffsClosedForm(const GameParams& params, const CanonicalBox& c);

}  // namespace nlgames

#endif  // NLGAMES_BOX_HPP_
