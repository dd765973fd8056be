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

#include "gcert/channel.hpp"

#include <cmath>
#include <iostream>
#include <string>

namespace gcert {

namespace {

constexpr double kAsymmetryWarn = 1e-9;

HermitianMatrix cp_operand(const GaussianChannel& t) {
  const RealMatrix sigma = symplectic_form(t.modes());
  return HermitianMatrix::from_parts(t.y(), sigma - t.x_sigma_xt());
}

HermitianMatrix ppt_operand(const GaussianChannel& t) {
  const RealMatrix sigma = symplectic_form(t.modes());
  return HermitianMatrix::from_parts(t.y(), -(sigma + t.x_sigma_xt()));
}

// Places a1 on the first n1 modes and a2 on the remaining n2 (ModeMajor keeps
// this a plain direct sum).
RealMatrix direct_sum(const RealMatrix& a1, const RealMatrix& a2) {
  RealMatrix out = RealMatrix::Zero(a1.rows() + a2.rows(), a1.cols() + a2.cols());
  out.topLeftCorner(a1.rows(), a1.cols()) = a1;
  out.bottomRightCorner(a2.rows(), a2.cols()) = a2;
  return out;
}

}  // namespace

GaussianChannel GaussianChannel::unchecked(RealMatrix x, RealMatrix y, Ordering ordering) {
  const int n = mode_count(x, "GaussianChannel X");
  if (mode_count(y, "GaussianChannel Y") != n) {
    throw ContractViolation("GaussianChannel: X and Y have different dimensions");
  }
  if (!x.allFinite() || !y.allFinite()) throw ContractViolation("GaussianChannel: non-finite entries");
  x = reorder(x, ordering, Ordering::ModeMajor);
  y = reorder(y, ordering, Ordering::ModeMajor);
  const double asym = max_abs(RealMatrix(y - y.transpose()));
  if (asym > kAsymmetryWarn) {
    std::cerr << "gcert: warning: Y asymmetric by " << asym << "; symmetrizing\n";
  }
  RealMatrix ysym = (y + y.transpose()) / 2.0;
  return GaussianChannel(n, std::move(x), std::move(ysym), asym);
}

GaussianChannel GaussianChannel::make(RealMatrix x, RealMatrix y, Ordering ordering, double tol) {
  GaussianChannel t = unchecked(std::move(x), std::move(y), ordering);
  const double margin = validity_margin(t);
  if (margin < -tol) {
    throw InvalidChannel("GaussianChannel: Y + i(sigma - X sigma X^T) >= 0 violated (min eigenvalue " +
                         std::to_string(margin) + ")");
  }
  return t;
}

RealMatrix GaussianChannel::x_sigma_xt() const { return x_ * symplectic_form(n_) * x_.transpose(); }

GaussianChannel GaussianChannel::identity(int n) {
  return make(RealMatrix::Identity(2 * n, 2 * n), RealMatrix::Zero(2 * n, 2 * n));
}

GaussianChannel GaussianChannel::attenuator(double t, double y) {
  if (!(t >= 0.0)) throw ContractViolation("attenuator: t must be >= 0");
  return make(std::sqrt(t) * RealMatrix::Identity(2, 2), y * RealMatrix::Identity(2, 2));
}

DilationSpec::DilationSpec(RealMatrix s, CovarianceMatrix gamma_env, Ordering ordering)
    : n_(0), s_(std::move(s)), gamma_env_(std::move(gamma_env)) {
  const int total = mode_count(s_, "DilationSpec S");
  n_ = total - gamma_env_.modes();
  if (n_ < 1) throw ContractViolation("DilationSpec: S must act on more modes than the environment");
  // ModeMajor on environment-then-system is the concatenation of the two
  // ModeMajor orders; BlockMajor inputs are converted mode by mode.
  s_ = reorder(s_, ordering, Ordering::ModeMajor);
  gamma_env_ = gamma_env_.in(Ordering::ModeMajor);
  if (!is_symplectic(s_)) throw ContractViolation("DilationSpec: S is not symplectic");
  if (!is_valid_covariance(gamma_env_)) {
    throw ContractViolation("DilationSpec: Gamma_E violates Gamma_E + i sigma >= 0");
  }
}

bool is_valid_channel(const GaussianChannel& t, double tol) { return is_psd(cp_operand(t), tol); }

double validity_margin(const GaussianChannel& t) { return min_eigenvalue(cp_operand(t)); }

bool is_gauge_covariant(const GaussianChannel& t, double tol) {
  return commutes_with_form(t.x(), Ordering::ModeMajor, tol) && commutes_with_form(t.y(), Ordering::ModeMajor, tol);
}

bool is_ppt(const GaussianChannel& t, double tol) { return is_psd(ppt_operand(t), tol); }

double ppt_margin(const GaussianChannel& t) { return min_eigenvalue(ppt_operand(t)); }

GaussianChannel from_dilation(const DilationSpec& d) {
  const Eigen::Index e = 2 * d.env_modes();
  const Eigen::Index s = 2 * d.modes();
  const RealMatrix s3 = d.s().bottomLeftCorner(s, e);
  const RealMatrix s4 = d.s().bottomRightCorner(s, s);
  RealMatrix y = s3 * d.gamma_env().matrix() * s3.transpose();
  y = (y + y.transpose()) / 2.0;
  return GaussianChannel::make(s4, y);
}

bool is_passive_channel(const DilationSpec& d) {
  return is_symplectic(d.s()) && is_orthogonal(d.s()) && is_passive_state(d.gamma_env());
}

GaussianChannel tensor(const GaussianChannel& t1, const GaussianChannel& t2) {
  return GaussianChannel::make(direct_sum(t1.x(), t2.x()), direct_sum(t1.y(), t2.y()));
}

GaussianChannel compose(const GaussianChannel& second, const GaussianChannel& first) {
  if (second.modes() != first.modes()) throw ContractViolation("compose: mode counts differ");
  RealMatrix y = second.x() * first.y() * second.x().transpose() + second.y();
  return GaussianChannel::make(second.x() * first.x(), y);
}

GaussianChannel conjugate(const GaussianChannel& t, const RealMatrix& g, const RealMatrix& f) {
  const Eigen::Index dim = 2 * t.modes();
  if (g.rows() != dim || g.cols() != dim || f.rows() != dim || f.cols() != dim) {
    throw ContractViolation("conjugate: G and F must match the channel dimension");
  }
  if (!is_symplectic(g) || !is_orthogonal(g)) throw ContractViolation("conjugate: G is not symplectic orthogonal");
  if (!is_symplectic(f) || !is_orthogonal(f)) throw ContractViolation("conjugate: F is not symplectic orthogonal");
  RealMatrix y = g * t.y() * g.transpose();
  return GaussianChannel::make(g * t.x() * f, (y + y.transpose()) / 2.0);
}

}  // namespace gcert
