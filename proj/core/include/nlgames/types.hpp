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

#ifndef NLGAMES_TYPES_HPP_
#define NLGAMES_TYPES_HPP_

#include <array>
#include <string_view>

namespace nlgames {

enum class Player { kAlice, kBob };

inline constexpr std::string_view PlayerName(Player p) {
  return p == Player::kAlice ? "A" : "B";
}

// The four maps from a type bit to an action bit (g1..g4).
enum class PureStrategy { kConst0 = 0, kConst1 = 1, kIdentity = 2, kFlip = 3 };

inline constexpr std::array<PureStrategy, 4> kAllPureStrategies = {
    PureStrategy::kConst0, PureStrategy::kConst1, PureStrategy::kIdentity,
    PureStrategy::kFlip};

inline constexpr int Apply(PureStrategy g, int type) {
  switch (g) {
    case PureStrategy::kConst0:
      return 0;
    case PureStrategy::kConst1:
      return 1;
    case PureStrategy::kIdentity:
      return type;
    case PureStrategy::kFlip:
      return type ^ 1;
  }
  return 0;
}

// 1-based label matching the usual g^1..g^4 numbering.
inline constexpr int StrategyNumber(PureStrategy g) {
  return static_cast<int>(g) + 1;
}

// Parameters of the game family G(kappa, tau). Both must be positive.
struct GameParams {
  double kappa = 0.5;
  double tau = 1.0;

  void Validate() const;
};

struct PayoffPair {
  double alice = 0.0;
  double bob = 0.0;

  double Sum() const { return alice + bob; }
  double Of(Player p) const { return p == Player::kAlice ? alice : bob; }
};

}  // namespace nlgames

#endif  // NLGAMES_TYPES_HPP_
