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

#include "gcert/symplectic.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace gcert {

std::string_view to_string(Ordering o) { return o == Ordering::ModeMajor ? "mode-major" : "block-major"; }

Ordering parse_ordering(std::string_view s) {
  if (s == "mode-major") return Ordering::ModeMajor;
  if (s == "block-major") return Ordering::BlockMajor;
  throw ContractViolation("unknown ordering '" + std::string(s) + "' (expected mode-major or block-major)");
}

int mode_count(const RealMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
    throw ContractViolation(std::string(what) + ": expected a square matrix of even dimension, got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  return static_cast<int>(m.rows() / 2);
}

RealMatrix symplectic_form(int n, Ordering ordering) {
  if (n < 1) throw ContractViolation("symplectic_form: n must be >= 1");
  RealMatrix s = RealMatrix::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    if (ordering == Ordering::ModeMajor) {
      s(2 * k, 2 * k + 1) = 1.0;
      s(2 * k + 1, 2 * k) = -1.0;
    } else {
      s(k, n + k) = 1.0;
      s(n + k, k) = -1.0;
    }
  }
  return s;
}

RealMatrix ordering_permutation(int n, Ordering from, Ordering to) {
  RealMatrix p = RealMatrix::Zero(2 * n, 2 * n);
  auto index = [n](Ordering o, int mode, int quadrature) {
    return o == Ordering::ModeMajor ? 2 * mode + quadrature : quadrature * n + mode;
  };
  for (int k = 0; k < n; ++k) {
    for (int q = 0; q < 2; ++q) p(index(to, k, q), index(from, k, q)) = 1.0;
  }
  return p;
}

RealMatrix reorder(const RealMatrix& m, Ordering from, Ordering to) {
  const int n = mode_count(m, "reorder");
  if (from == to) return m;
  const RealMatrix p = ordering_permutation(n, from, to);
  return p * m * p.transpose();
}

CovarianceMatrix::CovarianceMatrix(RealMatrix gamma, Ordering ordering)
    : n_(mode_count(gamma, "CovarianceMatrix")), ordering_(ordering), gamma_(std::move(gamma)) {
  const double asym = max_abs(RealMatrix(gamma_ - gamma_.transpose()));
  if (!gamma_.allFinite() || asym > 1e-9 * (1.0 + max_abs(gamma_))) {
    throw ContractViolation("CovarianceMatrix: matrix is not symmetric (max asymmetry " + std::to_string(asym) + ")");
  }
  gamma_ = (gamma_ + gamma_.transpose()) / 2.0;
}

CovarianceMatrix CovarianceMatrix::in(Ordering o) const {
  return CovarianceMatrix(reorder(gamma_, ordering_, o), o);
}

bool is_valid_covariance(const CovarianceMatrix& gamma, double tol) {
  const RealMatrix sigma = symplectic_form(gamma.modes(), gamma.ordering());
  return is_psd(HermitianMatrix::from_parts(gamma.matrix(), sigma), tol);
}

bool commutes_with_form(const RealMatrix& m, Ordering ordering, double tol) {
  const RealMatrix sigma = symplectic_form(mode_count(m, "commutes_with_form"), ordering);
  return max_abs(RealMatrix(m * sigma - sigma * m)) <= tol * (1.0 + max_abs(m));
}

bool is_passive_state(const CovarianceMatrix& gamma, double tol) {
  return commutes_with_form(gamma.matrix(), gamma.ordering(), tol);
}

bool is_squeezed(const CovarianceMatrix& gamma, double tol) {
  return min_eigenvalue(HermitianMatrix(gamma.matrix())) < 1.0 - tol;
}

bool is_symplectic(const RealMatrix& s, Ordering ordering, double tol) {
  const RealMatrix sigma = symplectic_form(mode_count(s, "is_symplectic"), ordering);
  return max_abs(RealMatrix(s * sigma * s.transpose() - sigma)) <= tol * (1.0 + max_abs(s) * max_abs(s));
}

bool is_orthogonal(const RealMatrix& s, double tol) {
  if (s.rows() != s.cols()) return false;
  return max_abs(RealMatrix(s * s.transpose() - RealMatrix::Identity(s.rows(), s.cols()))) <= tol;
}

PassiveUnitary::PassiveUnitary(ComplexMatrix u) : u_(std::move(u)) {
  if (u_.rows() != u_.cols() || u_.rows() == 0) throw ContractViolation("PassiveUnitary: matrix must be square");
  const double defect = unitarity_defect(u_);
  if (!(defect <= 1e-10)) {
    throw ContractViolation("PassiveUnitary: matrix is not unitary (max |U^dagger U - I| = " + std::to_string(defect) + ")");
  }
}

RealMatrix unitary_to_symplectic(const PassiveUnitary& u, Ordering ordering) {
  const int m = u.modes();
  RealMatrix out(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const Complex c = u.matrix()(i, j);
      out(2 * i, 2 * j) = c.real();
      out(2 * i, 2 * j + 1) = c.imag();
      out(2 * i + 1, 2 * j) = -c.imag();
      out(2 * i + 1, 2 * j + 1) = c.real();
    }
  }
  return reorder(out, Ordering::ModeMajor, ordering);
}

ComplexMatrix block_to_complex(const RealMatrix& m, double tol) {
  const int n = mode_count(m, "block_to_complex");
  const auto a = m.topLeftCorner(n, n);
  const auto b = m.topRightCorner(n, n);
  const double scale = tol * (1.0 + max_abs(m));
  const double da = max_abs(RealMatrix(m.bottomRightCorner(n, n) - a));
  if (da > scale) {
    throw ContractViolation("block_to_complex: bottom-right block differs from top-left block A by " + std::to_string(da));
  }
  const double db = max_abs(RealMatrix(m.bottomLeftCorner(n, n) + b));
  if (db > scale) {
    throw ContractViolation("block_to_complex: bottom-left block differs from -B by " + std::to_string(db));
  }
  ComplexMatrix z(n, n);
  z.real() = (a + m.bottomRightCorner(n, n)) / 2.0;
  z.imag() = (b - m.bottomLeftCorner(n, n)) / 2.0;
  return z;
}

RealMatrix complex_to_block(const ComplexMatrix& z) {
  const Eigen::Index n = z.rows();
  RealMatrix m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = z.real();
  m.topRightCorner(n, n) = z.imag();
  m.bottomLeftCorner(n, n) = -z.imag();
  m.bottomRightCorner(n, n) = z.real();
  return m;
}

bool block_psd_check(const RealMatrix& a, const RealMatrix& b, double tol) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw ContractViolation("block_psd_check: A and B must be square of equal dimension");
  }
  ComplexMatrix plus(a.rows(), a.cols());
  plus.real() = a;
  plus.imag() = b;
  const ComplexMatrix minus = plus.conjugate();
  return is_psd(HermitianMatrix(plus), tol) && is_psd(HermitianMatrix(minus), tol);
}

GaugeSvd symplectic_svd_gauge(const RealMatrix& x, Ordering ordering) {
  if (!commutes_with_form(x, ordering)) {
    throw ContractViolation("symplectic_svd_gauge: X does not commute with the symplectic form");
  }
  const RealMatrix xb = reorder(x, ordering, Ordering::BlockMajor);
  const SvdResult svd = complex_svd(block_to_complex(xb));
  // U^dagger (X1 + iX2) V = diag(s).
  GaugeSvd out;
  out.g = reorder(complex_to_block(svd.u.adjoint()), Ordering::BlockMajor, ordering);
  out.f = reorder(complex_to_block(svd.v), Ordering::BlockMajor, ordering);
  out.x_hat = svd.singular_values;
  return out;
}

RealMatrix beamsplitter(double t, int mode_a, int mode_b, int n, Ordering ordering) {
  if (!(t >= 0.0 && t <= 1.0)) throw ContractViolation("beamsplitter: transmittivity must lie in [0, 1]");
  if (mode_a < 0 || mode_b < 0 || mode_a >= n || mode_b >= n || mode_a == mode_b) {
    throw ContractViolation("beamsplitter: invalid mode pair");
  }
  ComplexMatrix u = ComplexMatrix::Identity(n, n);
  const double ct = std::sqrt(t);
  const double st = std::sqrt(1.0 - t);
  u(mode_a, mode_a) = ct;
  u(mode_a, mode_b) = st;
  u(mode_b, mode_a) = -st;
  u(mode_b, mode_b) = ct;
  return unitary_to_symplectic(PassiveUnitary(u), ordering);
}

RealMatrix phase_shifter(double phi, int mode, int n, Ordering ordering) {
  if (mode < 0 || mode >= n) throw ContractViolation("phase_shifter: invalid mode");
  ComplexMatrix u = ComplexMatrix::Identity(n, n);
  u(mode, mode) = std::polar(1.0, phi);
  return unitary_to_symplectic(PassiveUnitary(u), ordering);
}

CovarianceMatrix thermal_covariance(const ComplexMatrix& h, double beta, Ordering ordering) {
  if (!(beta > 0.0)) throw ContractViolation("thermal_covariance: beta must be > 0");
  const HermitianEigen eig = herm_eigen(HermitianMatrix(h));
  const Eigen::Index m = h.rows();
  RealMatrix occupations = RealMatrix::Zero(2 * m, 2 * m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const double eps = eig.values(k);
    if (!(eps > 0.0)) throw ContractViolation("thermal_covariance: mode energies must be positive");
    const double x = beta * eps / 2.0;
    const double nu = std::isinf(x) ? 1.0 : 1.0 / std::tanh(x);
    occupations(2 * k, 2 * k) = nu;
    occupations(2 * k + 1, 2 * k + 1) = nu;
  }
  const RealMatrix rot = unitary_to_symplectic(PassiveUnitary(eig.vectors));
  RealMatrix gamma = rot * occupations * rot.transpose();
  return CovarianceMatrix(reorder(RealMatrix((gamma + gamma.transpose()) / 2.0), Ordering::ModeMajor, ordering), ordering);
}

}  // namespace gcert
