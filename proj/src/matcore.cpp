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

#include "gcert/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace gcert {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr int kMaxSweeps = 100;

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ContractViolation(std::string(what) + ": expected a non-empty square matrix, got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

// Sum of squared moduli strictly off the diagonal.
double off_diagonal_mass(const ComplexMatrix& h) {
  double off = 0.0;
  for (Eigen::Index j = 0; j < h.cols(); ++j) {
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
      if (i != j) off += std::norm(h(i, j));
    }
  }
  return off;
}

// One complex Jacobi rotation zeroing h(p,q), p < q. J = diag(1, conj(e)) * R
// where e is the phase of h(p,q) and R the real Jacobi rotation of the
// resulting real 2x2 block.
void rotate(ComplexMatrix& h, ComplexMatrix& v, Eigen::Index p, Eigen::Index q) {
  const Complex hpq = h(p, q);
  const double b = std::abs(hpq);
  if (b == 0.0) return;
  const Complex e = hpq / b;
  const Complex ec = std::conj(e);
  const double a = h(p, p).real();
  const double d = h(q, q).real();
  const double theta = (d - a) / (2.0 * b);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Eigen::Index n = h.rows();
  // H <- H J and V <- V J.
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex hkp = h(k, p);
    const Complex hkq = h(k, q);
    h(k, p) = c * hkp - s * ec * hkq;
    h(k, q) = s * hkp + c * ec * hkq;
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * ec * vkq;
    v(k, q) = s * vkp + c * ec * vkq;
  }
  // H <- J^dagger H.
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex hpk = h(p, k);
    const Complex hqk = h(q, k);
    h(p, k) = c * hpk - s * e * hqk;
    h(q, k) = s * hpk + c * e * hqk;
  }
  h(p, q) = 0.0;
  h(q, p) = 0.0;
  h(p, p) = h(p, p).real();
  h(q, q) = h(q, q).real();
}

}  // namespace

double max_abs(const RealMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

HermitianMatrix::HermitianMatrix(const ComplexMatrix& h) {
  require_square(h, "HermitianMatrix");
  const double defect = max_abs(ComplexMatrix(h - h.adjoint()));
  if (!std::isfinite(defect) || defect > kHermitianTol * (1.0 + max_abs(h))) {
    throw ContractViolation("HermitianMatrix: input is not Hermitian (max |H - H^dagger| = " +
                            std::to_string(defect) + ")");
  }
  m_ = (h + h.adjoint()) / 2.0;
}

HermitianMatrix::HermitianMatrix(const RealMatrix& h)
    : HermitianMatrix(ComplexMatrix(h.cast<Complex>())) {}

HermitianMatrix HermitianMatrix::from_parts(const RealMatrix& re, const RealMatrix& im) {
  if (re.rows() != im.rows() || re.cols() != im.cols()) {
    throw ContractViolation("HermitianMatrix::from_parts: shape mismatch");
  }
  ComplexMatrix m(re.rows(), re.cols());
  m.real() = re;
  m.imag() = im;
  return HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  if (o.dim() != dim()) throw ContractViolation("HermitianMatrix: dimension mismatch in +");
  return HermitianMatrix(Trusted{}, m_ + o.m_);
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
  if (o.dim() != dim()) throw ContractViolation("HermitianMatrix: dimension mismatch in -");
  return HermitianMatrix(Trusted{}, m_ - o.m_);
}

HermitianMatrix HermitianMatrix::operator*(double s) const { return HermitianMatrix(Trusted{}, m_ * s); }

HermitianEigen herm_eigen(const HermitianMatrix& hm) {
  ComplexMatrix h = hm.matrix();
  const Eigen::Index n = h.rows();
  ComplexMatrix v = ComplexMatrix::Identity(n, n);

  const double scale = h.norm();
  const double target = 1e-14 * scale;
  int sweeps = 0;
  while (sweeps < kMaxSweeps) {
    const double off = std::sqrt(off_diagonal_mass(h));
    if (off <= target || off == 0.0) break;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) rotate(h, v, p, q);
    }
    ++sweeps;
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index i, Eigen::Index j) { return h(i, i).real() < h(j, j).real(); });

  HermitianEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = h(order[k], order[k]).real();
    out.vectors.col(k) = v.col(order[k]);
  }
  out.sweeps = sweeps;
  return out;
}

double min_eigenvalue(const HermitianMatrix& h) { return herm_eigen(h).values(0); }

bool is_psd(const HermitianMatrix& h, double tol) { return min_eigenvalue(h) >= -tol; }

SvdResult complex_svd(const ComplexMatrix& z) {
  require_square(z, "complex_svd");
  const Eigen::Index n = z.rows();
  const HermitianEigen eig = herm_eigen(HermitianMatrix(ComplexMatrix(z.adjoint() * z)));

  // sigma_k = |Z v_k| is more accurate than sqrt of the Gram eigenvalue.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  RealVector sigma(n);
  for (Eigen::Index k = 0; k < n; ++k) sigma(k) = (z * eig.vectors.col(k)).norm();
  std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return sigma(i) > sigma(j); });

  SvdResult out;
  out.singular_values.resize(n);
  out.v.resize(n, n);
  out.u = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.singular_values(k) = sigma(order[k]);
    out.v.col(k) = eig.vectors.col(order[k]);
  }

  const double cutoff = 1e-12 * std::max(out.singular_values(0), 1e-300);
  auto orthogonalize = [&](Eigen::VectorXcd w, Eigen::Index filled) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index j = 0; j < filled; ++j) w -= out.u.col(j).dot(w) * out.u.col(j);
    }
    return w;
  };

  Eigen::Index filled = 0;
  std::vector<Eigen::Index> null_slots;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (out.singular_values(k) <= cutoff) {
      out.singular_values(k) = 0.0;
      null_slots.push_back(k);
      continue;
    }
    Eigen::VectorXcd w = orthogonalize(z * out.v.col(k), filled);
    // Columns are filled in order, so slot k == filled for all non-null k.
    out.u.col(k) = w / w.norm();
    ++filled;
  }
  // Complete U with standard basis vectors orthogonal to what is filled.
  Eigen::Index basis = 0;
  for (Eigen::Index slot : null_slots) {
    while (basis < n) {
      Eigen::VectorXcd w = orthogonalize(Eigen::VectorXcd::Unit(n, basis++), filled);
      if (w.norm() > 1e-6) {
        out.u.col(slot) = w / w.norm();
        ++filled;
        break;
      }
    }
  }
  return out;
}

HermitianMatrix psd_project(const HermitianMatrix& h) {
  const HermitianEigen eig = herm_eigen(h);
  const RealVector clipped = eig.values.cwiseMax(0.0);
  const ComplexMatrix p = eig.vectors * clipped.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  return HermitianMatrix(ComplexMatrix((p + p.adjoint()) / 2.0));
}

double unitarity_defect(const ComplexMatrix& u) {
  return max_abs(ComplexMatrix(u.adjoint() * u - ComplexMatrix::Identity(u.cols(), u.cols())));
}

}  // namespace gcert
