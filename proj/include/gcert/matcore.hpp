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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

/// Dense kernels for the small real/complex matrices used throughout gcert.
///
/// Storage is Eigen; the spectral routines (Hermitian eigensolver, SVD, cone
/// projection) are implemented here on top of a cyclic complex Jacobi sweep so
/// that every PSD verdict flows through one validated kernel.
namespace gcert {

using Complex = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Absolute eigenvalue floor used by every PSD verdict unless overridden.
inline constexpr double kDefaultPsdTol = 1e-9;

/// Thrown when a documented precondition on an argument does not hold.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest absolute entry, 0 for empty matrices.
double max_abs(const RealMatrix& m);
double max_abs(const ComplexMatrix& m);

/// Complex square matrix that is Hermitian by construction.
///
/// The constructor rejects inputs whose anti-Hermitian part exceeds
/// 1e-12 * (1 + max|H|) and stores the symmetrized matrix (H + H^dagger)/2.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const ComplexMatrix& h);
  explicit HermitianMatrix(const RealMatrix& h);

  /// Re + i*Im, with Re symmetric and Im antisymmetric.
  static HermitianMatrix from_parts(const RealMatrix& re, const RealMatrix& im);

  Eigen::Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }

  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix operator-(const HermitianMatrix& o) const;
  HermitianMatrix operator*(double s) const;

 private:
  struct Trusted {};
  HermitianMatrix(Trusted, ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

struct HermitianEigen {
  RealVector values;     // ascending
  ComplexMatrix vectors; // columns are orthonormal eigenvectors
  int sweeps = 0;
};

/// Cyclic Jacobi diagonalization: H = V diag(values) V^dagger.
HermitianEigen herm_eigen(const HermitianMatrix& h);

double min_eigenvalue(const HermitianMatrix& h);

/// True iff the smallest eigenvalue is >= -tol.
bool is_psd(const HermitianMatrix& h, double tol = kDefaultPsdTol);

struct SvdResult {
  ComplexMatrix u;
  RealVector singular_values; // descending, nonnegative
  ComplexMatrix v;
};

/// Z = U diag(s) V^dagger for square Z, computed from herm_eigen(Z^dagger Z).
SvdResult complex_svd(const ComplexMatrix& z);

/// Frobenius-nearest PSD matrix: eigenvalues clipped at zero.
HermitianMatrix psd_project(const HermitianMatrix& h);

/// max |U^dagger U - I|.
double unitarity_defect(const ComplexMatrix& u);

}  // namespace gcert
