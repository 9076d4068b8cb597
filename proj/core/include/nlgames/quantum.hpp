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

// Two-qubit states, qubit measurements and the boxes they generate.
//
// Conventions: computational basis |0>, |1>; Pauli matrices in the standard
// form; the '+' effect of a measurement along m is (alpha I + mu m.sigma) / 2.

#ifndef NLGAMES_QUANTUM_HPP_
#define NLGAMES_QUANTUM_HPP_

#include <array>
#include <optional>

#include <Eigen/Dense>

#include "nlgames/box.hpp"
#include "nlgames/types.hpp"

namespace nlgames {

using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Vector3 = Eigen::Vector3d;

class TwoQubitState {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kEigenvalueFloor = -1e-10;

  // Maximally mixed state I/4.
  TwoQubitState();

  // Throws ValidationError unless rho is Hermitian, unit trace and positive
  // semidefinite (eigenvalues >= -1e-10).
  static TwoQubitState FromDensityMatrix(const Matrix4c& rho);

  // |psi> = a|00> + b|11>, b = sqrt(1 - a^2), 0 < a < 1.
  static TwoQubitState Pure(double a);

  // Normalizes |psi| (basis order |00>, |01>, |10>, |11>).
  static TwoQubitState FromAmplitudes(const Eigen::Vector4cd& psi);

  // (|01> - |10>) / sqrt(2).
  static TwoQubitState Singlet();

  // p |psi-><psi-| + (1 - p) I/4, 0 <= p <= 1.
  static TwoQubitState Werner(double p);

  const Matrix4c& rho() const { return rho_; }

  TwoQubitState WithLocalUnitaries(const Matrix2c& ua,
                                   const Matrix2c& ub) const;

 private:
  explicit TwoQubitState(const Matrix4c& rho) : rho_(rho) {}
  Matrix4c rho_;
};

// Direction (sin t cos f, sin t sin f, cos t) given by polar angle t and
// azimuth f in radians.
struct MeasDirection {
  double theta = 0.0;
  double phi = 0.0;

  Vector3 Unit() const;
  static MeasDirection FromVector(const Vector3& v);
};

// Two-outcome qubit POVM {E, I - E} with E = (alpha I + mu m.sigma) / 2.
// Admissible iff 0 < alpha <= 2 and 0 <= mu <= min(alpha, 2 - alpha).
struct POVMParams {
  double alpha = 1.0;
  double mu = 1.0;

  void Validate(double tol = 1e-12) const;
};

struct Effects {
  Matrix2c plus;
  Matrix2c minus;
};

Effects ProjectiveEffects(const MeasDirection& d);
Effects PovmEffects(const MeasDirection& d, const POVMParams& pp);

struct QuantumStrategy {
  TwoQubitState state;
  std::array<MeasDirection, 2> alice{};
  std::array<MeasDirection, 2> bob{};
  // Applied to all four measurements when present; absent means projective.
  std::optional<POVMParams> povm;
  // Per-player override of |povm| (A, B), set by POVM best-response searches.
  std::array<std::optional<POVMParams>, 2> player_povm{};

  POVMParams PovmFor(Player p) const {
    const auto& own = player_povm[p == Player::kAlice ? 0 : 1];
    if (own) return *own;
    return povm.value_or(POVMParams{1.0, 1.0});
  }
};

// P(ab|ij) = Tr[rho (E^a_i (x) F^b_j)].
Box BoxFromStrategy(const QuantumStrategy& s);
Box BoxFromEffects(const TwoQubitState& state,
                   const std::array<Effects, 2>& alice,
                   const std::array<Effects, 2>& bob);

// Measurement directions of a projective strategy in Cartesian form:
// Alice's M0 = p, M1 = q, Bob's M0 = r, M1 = s.
struct ProjectiveDirections {
  Vector3 p;
  Vector3 q;
  Vector3 r;
  Vector3 s;

  static ProjectiveDirections FromAngles(const std::array<MeasDirection, 2>& alice,
                                         const std::array<MeasDirection, 2>& bob);
};

// Explicit table of the 16 joint probabilities for a|00> + b|11> and
// projective measurements, written out entry by entry.
Box PureStateBoxClosedForm(double a, const ProjectiveDirections& dirs);

// Closed-form payoffs of G(1/2, 1) for a|00> + b|11> and projective
// measurements along |dirs|.
PayoffPair ProjectivePayoffsClosedForm(double a, const ProjectiveDirections& dirs);

// Largest CHSH value of a|00> + b|11>: 2 sqrt(1 + 4 a^2 b^2).
double ChshMaxPure(double a);

// Alice measures z then x, Bob measures (sin b, 0, cos b) and
// (sin b', 0, cos b') with cos b = -cos b' = 1 / sqrt(1 + 4 a^2 b^2). The
// state is a|00> + b|11> with a Hadamard on Alice's qubit, which orients
// these directions so that B = <00> + <01> + <10> - <11> reaches
// ChshMaxPure(a).
QuantumStrategy GisinSettings(double a);

// Directions giving B = 2 sqrt(2) * p on the Werner state W_p (and 2 sqrt(2)
// on the singlet): Alice z, x; Bob -(z + x)/sqrt(2), (x - z)/sqrt(2).
QuantumStrategy ChshOptimalStrategy(const TwoQubitState& state);

}  // namespace nlgames

#endif  // NLGAMES_QUANTUM_HPP_
