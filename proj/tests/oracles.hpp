// Copyright 2026 The gcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Independent reference computations for the test suites. Nothing here calls
// the library's own eigensolver.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>

#include "gcert/channel.hpp"
#include "gcert/symplectic.hpp"

namespace oracle {

using gcert::ComplexMatrix;
using gcert::RealMatrix;

inline constexpr unsigned kSeed = 20260114u;

// Smallest eigenvalue of a Hermitian matrix through its real embedding
// [[Re, -Im], [Im, Re]] and Eigen's LAPACK-style solver. The embedding has
// every eigenvalue twice, so the minimum is unchanged.
inline double min_eig(const ComplexMatrix& h) {
  const Eigen::Index n = h.rows();
  RealMatrix e(2 * n, 2 * n);
  e << h.real(), -h.imag(), h.imag(), h.real();
  e = (e + e.transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(e, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

inline double min_eig(const RealMatrix& re, const RealMatrix& im) {
  ComplexMatrix h(re.rows(), re.cols());
  h.real() = re;
  h.imag() = im;
  return min_eig(h);
}

// Sylvester's criterion on leading principal minors (strictly definite case).
inline bool positive_definite_by_minors(const ComplexMatrix& h) {
  for (Eigen::Index k = 1; k <= h.rows(); ++k) {
    if (h.topLeftCorner(k, k).determinant().real() <= 0.0) return false;
  }
  return true;
}

inline ComplexMatrix random_complex(std::mt19937& rng, Eigen::Index n, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  ComplexMatrix z(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) z(i, j) = {g(rng), g(rng)};
  return z;
}

inline RealMatrix random_real(std::mt19937& rng, Eigen::Index r, Eigen::Index c, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  RealMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = g(rng);
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937& rng, Eigen::Index n) {
  const ComplexMatrix z = random_complex(rng, n);
  return (z + z.adjoint()) / 2.0;
}

inline ComplexMatrix random_unitary(std::mt19937& rng, Eigen::Index n) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_complex(rng, n));
  ComplexMatrix q = qr.householderQ();
  return q;
}

// Gauge-covariant (X, Y) in mode-major order from complex parameters: X from
// Z, Y from a Hermitian PSD W plus a multiple of the identity chosen so the
// result is a valid channel that lands on either side of the PPT boundary.
struct GaugeSample {
  gcert::GaussianChannel channel;
  double ppt_shift = 0.0;  // identity shift that would put Y exactly on the PPT boundary
  double shift = 0.0;
};

inline RealMatrix mode_major(const ComplexMatrix& z) {
  return gcert::reorder(gcert::complex_to_block(z), gcert::Ordering::BlockMajor, gcert::Ordering::ModeMajor);
}

inline GaugeSample random_gauge_channel(std::mt19937& rng, int n) {
  const RealMatrix x = mode_major(random_complex(rng, n, 0.7));
  const ComplexMatrix g = random_complex(rng, n, 0.6);
  const RealMatrix y0 = mode_major(g * g.adjoint());
  const RealMatrix sigma = gcert::symplectic_form(n);
  const RealMatrix xsx = x * sigma * x.transpose();
  const double cp_shift = std::max(0.0, -min_eig(y0, RealMatrix(sigma - xsx)));
  const double ppt_shift = -min_eig(y0, RealMatrix(-(sigma + xsx)));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double shift = cp_shift + u(rng) * 2.0 * std::max(ppt_shift - cp_shift, 0.1);
  const RealMatrix y = y0 + shift * RealMatrix::Identity(2 * n, 2 * n);
  return {gcert::GaussianChannel::make(x, y), ppt_shift, shift};
}

// Generic valid channel: random X, Y = G G^T shifted just past the CP boundary.
inline gcert::GaussianChannel random_channel(std::mt19937& rng, int n) {
  const RealMatrix x = random_real(rng, 2 * n, 2 * n, 0.6);
  const RealMatrix g = random_real(rng, 2 * n, 2 * n, 0.8);
  const RealMatrix y0 = g * g.transpose();
  const RealMatrix sigma = gcert::symplectic_form(n);
  const double cp_shift = std::max(0.0, -min_eig(y0, RealMatrix(sigma - x * sigma * x.transpose())));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return gcert::GaussianChannel::make(x, y0 + (cp_shift + u(rng)) * RealMatrix::Identity(2 * n, 2 * n));
}

// Passive dilation: a random product of beamsplitters and phase shifters on
// nE + n modes, thermal environment modes.
struct PassiveSample {
  RealMatrix s;
  RealMatrix gamma_env;
};

inline PassiveSample random_passive_dilation(std::mt19937& rng, int n, int ne) {
  const int total = n + ne;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> mode(0, total - 1);
  RealMatrix s = RealMatrix::Identity(2 * total, 2 * total);
  for (int k = 0; k < 3 * total; ++k) {
    int a = mode(rng), b = mode(rng);
    while (b == a) b = mode(rng);
    s = gcert::beamsplitter(u(rng), a, b, total) * s;
    s = gcert::phase_shifter(2.0 * M_PI * u(rng), mode(rng), total) * s;
  }
  RealMatrix gamma = RealMatrix::Zero(2 * ne, 2 * ne);
  for (int k = 0; k < ne; ++k) gamma.block(2 * k, 2 * k, 2, 2) = (1.0 + 4.0 * u(rng)) * RealMatrix::Identity(2, 2);
  // Rotate the environment by a passive unitary so it is thermal but not diagonal.
  const RealMatrix v = mode_major(random_unitary(rng, ne));
  return {s, v * gamma * v.transpose()};
}

}  // namespace oracle
