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

#include <string_view>

#include "gcert/matcore.hpp"

namespace gcert {

/// Phase-space coordinate order.
///   ModeMajor:  (Q1, P1, ..., Qn, Pn)  -- the internal canonical order
///   BlockMajor: (Q1, ..., Qn, P1, ..., Pn)
enum class Ordering { ModeMajor, BlockMajor };

std::string_view to_string(Ordering o);
/// Accepts "mode-major" / "block-major".
Ordering parse_ordering(std::string_view s);

/// Commutant membership tolerance: |[M, sigma]|_max <= kCommutantTol * (1 + |M|_max).
inline constexpr double kCommutantTol = 1e-9;

/// Symplectic form on n modes in the requested order.
RealMatrix symplectic_form(int n, Ordering ordering = Ordering::ModeMajor);

/// Permutation P with (P v)_to = v_from, i.e. reorder(M) = P M P^T.
RealMatrix ordering_permutation(int n, Ordering from, Ordering to);

RealMatrix reorder(const RealMatrix& m, Ordering from, Ordering to);

/// Mode count of a 2n x 2n matrix; throws on odd or non-square shapes.
int mode_count(const RealMatrix& m, const char* what);

/// Real symmetric 2n x 2n second-moment matrix.
class CovarianceMatrix {
 public:
  CovarianceMatrix(RealMatrix gamma, Ordering ordering = Ordering::ModeMajor);

  int modes() const { return n_; }
  Ordering ordering() const { return ordering_; }
  const RealMatrix& matrix() const { return gamma_; }
  /// Same state expressed in another ordering.
  CovarianceMatrix in(Ordering o) const;

 private:
  int n_;
  Ordering ordering_;
  RealMatrix gamma_;
};

/// Uncertainty relation Gamma + i sigma >= 0.
bool is_valid_covariance(const CovarianceMatrix& gamma, double tol = kDefaultPsdTol);
/// Gibbs state of a passive Hamiltonian, i.e. [Gamma, sigma] = 0.
bool is_passive_state(const CovarianceMatrix& gamma, double tol = kCommutantTol);
/// Some quadrature variance below vacuum: min eigenvalue < 1 - tol.
bool is_squeezed(const CovarianceMatrix& gamma, double tol = kDefaultPsdTol);

/// |[M, sigma]|_max <= tol * (1 + |M|_max).
bool commutes_with_form(const RealMatrix& m, Ordering ordering, double tol = kCommutantTol);

bool is_symplectic(const RealMatrix& s, Ordering ordering = Ordering::ModeMajor, double tol = kCommutantTol);
bool is_orthogonal(const RealMatrix& s, double tol = kCommutantTol);

/// m x m unitary, checked to 1e-10.
class PassiveUnitary {
 public:
  explicit PassiveUnitary(ComplexMatrix u);
  int modes() const { return static_cast<int>(u_.rows()); }
  const ComplexMatrix& matrix() const { return u_; }

 private:
  ComplexMatrix u_;
};

/// Group isomorphism U(m) -> K(m): entry c_ij becomes [[Re c, Im c], [-Im c, Re c]].
RealMatrix unitary_to_symplectic(const PassiveUnitary& u, Ordering ordering = Ordering::ModeMajor);

/// [[A, B], [-B, A]] (BlockMajor) -> A + iB. Throws ContractViolation naming
/// the offending block when the pattern does not hold to `tol`.
ComplexMatrix block_to_complex(const RealMatrix& m, double tol = kCommutantTol);
/// A + iB -> [[A, B], [-B, A]] (BlockMajor).
RealMatrix complex_to_block(const ComplexMatrix& z);

/// [[A, B], [-B, A]] >= 0, decided via A + iB >= 0 and A - iB >= 0.
bool block_psd_check(const RealMatrix& a, const RealMatrix& b, double tol = kDefaultPsdTol);

struct GaugeSvd {
  RealMatrix g;          // symplectic orthogonal, same ordering as the input
  RealMatrix f;          // symplectic orthogonal, same ordering as the input
  RealVector x_hat;      // descending, nonnegative
};

/// For X in the commutant of sigma: G X F = X_hat (+) X_hat in BlockMajor
/// coordinates. Built from the SVD of X1 + iX2.
GaugeSvd symplectic_svd_gauge(const RealMatrix& x, Ordering ordering = Ordering::ModeMajor);

/// Beamsplitter on modes (a, b) of an n-mode system (0-based), acting as
/// [[sqrt(t), sqrt(1-t)], [-sqrt(1-t), sqrt(t)]] on the pair.
RealMatrix beamsplitter(double t, int mode_a, int mode_b, int n, Ordering ordering = Ordering::ModeMajor);
RealMatrix phase_shifter(double phi, int mode, int n, Ordering ordering = Ordering::ModeMajor);

/// Gibbs covariance of sum_kl h_kl a_k^dagger a_l at inverse temperature beta.
/// Normal-mode occupations nu = coth(beta * eps / 2); beta = +inf gives vacuum.
CovarianceMatrix thermal_covariance(const ComplexMatrix& h, double beta, Ordering ordering = Ordering::ModeMajor);

}  // namespace gcert
