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

#include "nlgames/quantum.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "nlgames/error.hpp"

namespace nlgames {
namespace {

using Complex = std::complex<double>;

Matrix2c PauliDot(const Vector3& v) {
  Matrix2c m;
  m << Complex(v.z(), 0.0), Complex(v.x(), -v.y()),
      Complex(v.x(), v.y()), Complex(-v.z(), 0.0);
  return m;
}

// Re Tr[rho (e (x) f)] without forming the Kronecker product.
double BornProbability(const Matrix4c& rho, const Matrix2c& e,
                       const Matrix2c& f) {
  Complex acc = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) {
      for (int j = 0; j < 2; ++j) {
        for (int l = 0; l < 2; ++l) {
          // (e (x) f)(2j + l, 2i + k) = e(j, i) f(l, k)
          acc += rho(2 * i + k, 2 * j + l) * e(j, i) * f(l, k);
        }
      }
    }
  }
  return acc.real();
}

}  // namespace

TwoQubitState::TwoQubitState() : rho_(Matrix4c::Identity() * 0.25) {}

TwoQubitState TwoQubitState::FromDensityMatrix(const Matrix4c& rho) {
  if (!rho.allFinite()) throw ValidationError("density matrix is not finite");
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    std::ostringstream os;
    os << "density matrix is not Hermitian (deviation " << herm << ")";
    throw ValidationError(os.str());
  }
  const Complex tr = rho.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol) {
    std::ostringstream os;
    os << "density matrix trace is " << tr.real() << " + " << tr.imag()
       << "i, not 1";
    throw ValidationError(os.str());
  }
  const Matrix4c sym = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(sym, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < kEigenvalueFloor) {
    std::ostringstream os;
    os << "density matrix is not positive semidefinite (eigenvalue "
       << min_eig << ")";
    throw ValidationError(os.str());
  }
  return TwoQubitState(sym);
}

TwoQubitState TwoQubitState::Pure(double a) {
  if (!(a > 0.0 && a < 1.0)) {
    throw ValidationError("pure-state amplitude a must lie in (0, 1)");
  }
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  psi(0) = a;
  psi(3) = std::sqrt(1.0 - a * a);
  return FromAmplitudes(psi);
}

TwoQubitState TwoQubitState::FromAmplitudes(const Eigen::Vector4cd& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw ValidationError("state vector has zero or non-finite norm");
  }
  const Eigen::Vector4cd v = psi / norm;
  return TwoQubitState(v * v.adjoint());
}

TwoQubitState TwoQubitState::Singlet() {
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  psi(1) = 1.0 / std::numbers::sqrt2;
  psi(2) = -1.0 / std::numbers::sqrt2;
  return FromAmplitudes(psi);
}

TwoQubitState TwoQubitState::Werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("Werner visibility p must lie in [0, 1]");
  }
  const Matrix4c rho =
      p * Singlet().rho() + (1.0 - p) * 0.25 * Matrix4c::Identity();
  return TwoQubitState(rho);
}

TwoQubitState TwoQubitState::WithLocalUnitaries(const Matrix2c& ua,
                                                const Matrix2c& ub) const {
  Matrix4c u;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      u.block<2, 2>(2 * i, 2 * j) = ua(i, j) * ub;
    }
  }
  return FromDensityMatrix(u * rho_ * u.adjoint());
}

Vector3 MeasDirection::Unit() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

MeasDirection MeasDirection::FromVector(const Vector3& v) {
  const double r = v.norm();
  if (!(r > 0.0)) throw ValidationError("measurement direction is zero");
  const Vector3 u = v / r;
  return {std::acos(std::clamp(u.z(), -1.0, 1.0)), std::atan2(u.y(), u.x())};
}

void POVMParams::Validate(double tol) const {
  if (!(alpha > 0.0 && alpha <= 2.0 + tol)) {
    throw ValidationError("POVM alpha must satisfy 0 < alpha <= 2");
  }
  if (!(mu >= -tol && mu <= std::min(alpha, 2.0 - alpha) + tol)) {
    throw ValidationError("POVM mu must satisfy 0 <= mu <= min(alpha, 2 - alpha)");
  }
}

Effects ProjectiveEffects(const MeasDirection& d) {
  return PovmEffects(d, POVMParams{1.0, 1.0});
}

Effects PovmEffects(const MeasDirection& d, const POVMParams& pp) {
  pp.Validate();
  const Matrix2c plus =
      0.5 * (pp.alpha * Matrix2c::Identity() + pp.mu * PauliDot(d.Unit()));
  return {plus, Matrix2c::Identity() - plus};
}

Box BoxFromEffects(const TwoQubitState& state,
                   const std::array<Effects, 2>& alice,
                   const std::array<Effects, 2>& bob) {
  Box::Table t{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Matrix2c* ea[2] = {&alice[i].plus, &alice[i].minus};
      const Matrix2c* eb[2] = {&bob[j].plus, &bob[j].minus};
      for (int ya = 0; ya < 2; ++ya) {
        for (int yb = 0; yb < 2; ++yb) {
          t[BoxIndex(i, j, ya, yb)] =
              BornProbability(state.rho(), *ea[ya], *eb[yb]);
        }
      }
    }
  }
  return Box::FromProbabilities(t);
}

Box BoxFromStrategy(const QuantumStrategy& s) {
  const POVMParams pa = s.PovmFor(Player::kAlice);
  const POVMParams pb = s.PovmFor(Player::kBob);
  const std::array<Effects, 2> alice = {PovmEffects(s.alice[0], pa),
                                        PovmEffects(s.alice[1], pa)};
  const std::array<Effects, 2> bob = {PovmEffects(s.bob[0], pb),
                                      PovmEffects(s.bob[1], pb)};
  return BoxFromEffects(s.state, alice, bob);
}

ProjectiveDirections ProjectiveDirections::FromAngles(
    const std::array<MeasDirection, 2>& alice,
    const std::array<MeasDirection, 2>& bob) {
  return {alice[0].Unit(), alice[1].Unit(), bob[0].Unit(), bob[1].Unit()};
}

Box PureStateBoxClosedForm(double a, const ProjectiveDirections& dirs) {
  if (!(a > 0.0 && a < 1.0)) {
    throw ValidationError("pure-state amplitude a must lie in (0, 1)");
  }
  const double b = std::sqrt(1.0 - a * a);
  const double a2 = a * a;
  const double b2 = b * b;
  // Every row has the same shape with (Alice, Bob) = (u, v).
  auto row = [&](const Vector3& u, const Vector3& v) {
    const double xy = 2.0 * a * b * (v.x() * u.x() - v.y() * u.y());
    return std::array<double, 4>{
        0.25 * (xy + b2 * (-1.0 + v.z()) * (u.z() - 1.0) +
                a2 * (v.z() + 1.0) * (u.z() + 1.0)),
        0.25 * (-xy - b2 * (1.0 + v.z()) * (u.z() - 1.0) -
                a2 * (v.z() - 1.0) * (u.z() + 1.0)),
        0.25 * (-xy - a2 * (1.0 + v.z()) * (u.z() - 1.0) -
                b2 * (v.z() - 1.0) * (u.z() + 1.0)),
        0.25 * (xy + a2 * (-1.0 + v.z()) * (u.z() - 1.0) +
                b2 * (v.z() + 1.0) * (u.z() + 1.0)),
    };
  };
  const Vector3* alice[2] = {&dirs.p, &dirs.q};
  const Vector3* bob[2] = {&dirs.r, &dirs.s};
  Box::Table t{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const auto probs = row(*alice[i], *bob[j]);
      for (int y = 0; y < 4; ++y) t[BoxIndex(i, j, y >> 1, y & 1)] = probs[y];
    }
  }
  return Box::FromProbabilities(t);
}

PayoffPair ProjectivePayoffsClosedForm(double a,
                                       const ProjectiveDirections& dirs) {
  const double b = std::sqrt(1.0 - a * a);
  const Vector3& p = dirs.p;
  const Vector3& q = dirs.q;
  const Vector3& r = dirs.r;
  const Vector3& s = dirs.s;
  const double transverse =
      1.5 * a * b *
      (r.x() * (p.x() + q.x()) + s.x() * (p.x() - q.x()) -
       r.y() * (p.y() + q.y()) - s.y() * (p.y() - q.y()));
  const double longitudinal =
      0.75 * (p.z() * (r.z() + s.z()) + q.z() * (r.z() - s.z()));
  const double bias =
      0.25 * (a * a - b * b) * (q.z() + s.z() + 2.0 * (p.z() + r.z()));
  return {(3.0 + transverse + longitudinal + bias) / 8.0,
          (3.0 + transverse + longitudinal - bias) / 8.0};
}

double ChshMaxPure(double a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw ValidationError("pure-state amplitude a must lie in [0, 1]");
  }
  const double b2 = 1.0 - a * a;
  return 2.0 * std::sqrt(1.0 + 4.0 * a * a * b2);
}

QuantumStrategy GisinSettings(double a) {
  if (!(a > 0.0 && a < 1.0)) {
    throw ValidationError("pure-state amplitude a must lie in (0, 1)");
  }
  const double b = std::sqrt(1.0 - a * a);
  const double cos_beta = 1.0 / std::sqrt(1.0 + 4.0 * a * a * b * b);
  const double beta = std::acos(cos_beta);

  // a|+0> + b|-1>, i.e. a Hadamard on Alice's half of a|00> + b|11>.
  Eigen::Vector4cd psi;
  psi << a, b, a, -b;
  QuantumStrategy s;
  s.state = TwoQubitState::FromAmplitudes(psi / std::numbers::sqrt2);
  s.alice = {MeasDirection{0.0, 0.0},
             MeasDirection{std::numbers::pi / 2.0, 0.0}};
  s.bob = {MeasDirection{beta, 0.0},
           MeasDirection{std::numbers::pi - beta, 0.0}};
  return s;
}

QuantumStrategy ChshOptimalStrategy(const TwoQubitState& state) {
  constexpr double kPi = std::numbers::pi;
  QuantumStrategy s;
  s.state = state;
  s.alice = {MeasDirection{0.0, 0.0}, MeasDirection{kPi / 2.0, 0.0}};
  s.bob = {MeasDirection{3.0 * kPi / 4.0, kPi},
           MeasDirection{3.0 * kPi / 4.0, 0.0}};
  return s;
}

}  // namespace nlgames
