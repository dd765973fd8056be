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

#pragma once

#include "gcert/symplectic.hpp"

namespace gcert {

/// Thrown when (X, Y) fails complete positivity at construction.
class InvalidChannel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Gaussian channel Gamma -> X Gamma X^T + Y on n modes.
///
/// Always stored in ModeMajor order; inputs given in BlockMajor are converted
/// at construction. Y is symmetrized on the way in.
class GaussianChannel {
 public:
  /// Validates complete positivity to `tol`; throws InvalidChannel otherwise.
  static GaussianChannel make(RealMatrix x, RealMatrix y, Ordering ordering = Ordering::ModeMajor,
                              double tol = kDefaultPsdTol);
  /// Skips the complete-positivity check. For probing invalid candidates.
  static GaussianChannel unchecked(RealMatrix x, RealMatrix y, Ordering ordering = Ordering::ModeMajor);

  int modes() const { return n_; }
  Ordering ordering() const { return Ordering::ModeMajor; }
  const RealMatrix& x() const { return x_; }
  const RealMatrix& y() const { return y_; }
  /// X sigma X^T.
  RealMatrix x_sigma_xt() const;
  /// Largest |Y - Y^T| entry seen before symmetrization.
  double input_asymmetry() const { return asymmetry_; }

  static GaussianChannel identity(int n);
  /// X = sqrt(t) I, Y = y I on one mode.
  static GaussianChannel attenuator(double t, double y);

 private:
  GaussianChannel(int n, RealMatrix x, RealMatrix y, double asymmetry)
      : n_(n), x_(std::move(x)), y_(std::move(y)), asymmetry_(asymmetry) {}
  int n_;
  RealMatrix x_;
  RealMatrix y_;
  double asymmetry_;
};

/// Unitary dilation: symplectic S on (environment + system) modes acting on
/// Gamma_E (+) Gamma, environment coordinates first.
class DilationSpec {
 public:
  DilationSpec(RealMatrix s, CovarianceMatrix gamma_env, Ordering ordering = Ordering::ModeMajor);

  int env_modes() const { return gamma_env_.modes(); }
  int modes() const { return n_; }
  Ordering ordering() const { return Ordering::ModeMajor; }
  const RealMatrix& s() const { return s_; }
  const CovarianceMatrix& gamma_env() const { return gamma_env_; }

 private:
  int n_;
  RealMatrix s_;
  CovarianceMatrix gamma_env_;
};

/// Y + i(sigma - X sigma X^T) >= 0.
bool is_valid_channel(const GaussianChannel& t, double tol = kDefaultPsdTol);
/// [X, sigma] = [Y, sigma] = 0.
bool is_gauge_covariant(const GaussianChannel& t, double tol = kCommutantTol);
/// Y - i(sigma + X sigma X^T) >= 0.
bool is_ppt(const GaussianChannel& t, double tol = kDefaultPsdTol);

/// Smallest eigenvalue of the complete-positivity operand.
double validity_margin(const GaussianChannel& t);
/// Smallest eigenvalue of the PPT operand.
double ppt_margin(const GaussianChannel& t);

/// X = S4, Y = S3 Gamma_E S3^T.
GaussianChannel from_dilation(const DilationSpec& d);
/// S symplectic and orthogonal, Gamma_E in the commutant of sigma.
bool is_passive_channel(const DilationSpec& d);

/// Parallel composition; T1 acts on the first modes.
GaussianChannel tensor(const GaussianChannel& t1, const GaussianChannel& t2);
/// Serial composition: apply `first`, then `second`.
GaussianChannel compose(const GaussianChannel& second, const GaussianChannel& first);
/// X' = G X F, Y' = G Y G^T for passive G, F acting on the system.
GaussianChannel conjugate(const GaussianChannel& t, const RealMatrix& g, const RealMatrix& f);

}  // namespace gcert
