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

#include <array>
#include <optional>
#include <string_view>

#include "gcert/channel.hpp"

/// Dual certificates for the entanglement-breaking program
///
///   max lambda  s.t.  M = M^T,  M - i lambda sigma >= 0,
///                     Y - M - i lambda X sigma X^T >= 0.
///
/// The two constraints are stacked into one block-diagonal operand on 4n
/// coordinates. A witness Omega = (A + iB) (+) (A + iC) with A symmetric and
/// B, C antisymmetric pairs to zero with every M (+) (-M), so positivity of
/// Omega turns any feasible point into the scalar inequality lambda*s <= y.
namespace gcert {

/// Lifted channel data: X~ = i sigma (+) i X sigma X^T, Y~ = 0 (+) Y.
struct LiftedChannel {
  int modes = 0;
  ComplexMatrix x_first;   // i sigma
  ComplexMatrix x_second;  // i X sigma X^T
  ComplexMatrix y_second;  // Y

  ComplexMatrix x_tilde() const;
  ComplexMatrix y_tilde() const;
};

LiftedChannel lift(const GaussianChannel& t);

/// lambda X~ + Y~ + (M (+) -M). PSD exactly when (lambda, M) satisfies the
/// complex-conjugated constraint pair, which is equivalent for real M and Y.
ComplexMatrix lifted_operand(const LiftedChannel& lifted, double lambda, const RealMatrix& m);

class Witness {
 public:
  /// A symmetric, B and C antisymmetric, all of the same even dimension.
  Witness(RealMatrix a, RealMatrix b, RealMatrix c);

  /// Two-mode witness from the three-parameter sparsity patterns
  ///   A = [[a1, 0, -a3, 0], [0, a1, 0, a3], [-a3, 0, a2, 0], [0, a3, 0, a2]]
  ///   B = [[0, b1, 0, b3], [-b1, 0, b3, 0], [0, -b3, 0, b2], [-b3, 0, -b2, 0]]
  /// with C patterned like B.
  static Witness from_vectors(const std::array<double, 3>& a, const std::array<double, 3>& b,
                              const std::array<double, 3>& c);

  int dim() const { return static_cast<int>(a_.rows()); }
  const RealMatrix& a() const { return a_; }
  const RealMatrix& b() const { return b_; }
  const RealMatrix& c() const { return c_; }
  ComplexMatrix first_block() const;   // A + iB
  ComplexMatrix second_block() const;  // A + iC
  /// (A - iB) (+) (A - iC); positive whenever the witness is.
  Witness conjugated() const;

 private:
  RealMatrix a_;
  RealMatrix b_;
  RealMatrix c_;
};

/// The certificate for the squeezed-environment example channel.
Witness paper_witness();

/// Re tr[Omega (first (+) second)].
double trace_pair(const Witness& w, const ComplexMatrix& first, const ComplexMatrix& second);

struct WitnessPairing {
  double s = 0.0;  // tr[Omega X~]
  double y = 0.0;  // tr[Omega Y~]
};

WitnessPairing pair_with(const Witness& w, const LiftedChannel& lifted);

/// tr[Omega ((M - i lambda sigma) (+) (Y - M - i lambda X sigma X^T))]; >= 0 at
/// every feasible (lambda, M) when Omega >= 0.
double constraint_pairing(const Witness& w, const GaussianChannel& t, double lambda, const RealMatrix& m);

/// Which orientation of the witness produced the bound.
///   Direct:     s > 0, Omega itself certifies lambda <= y / s.
///   Conjugated: s < 0, the conjugate witness certifies lambda <= y / |s|.
enum class SignConvention { Direct, Conjugated };
std::string_view to_string(SignConvention c);

/// Audit record of a verified witness.
struct WitnessCertificate {
  double min_eig_first = 0.0;
  double min_eig_second = 0.0;
  double antisymmetry_defect = 0.0;  // max |(B - C) + (B - C)^T|
  double s = 0.0;
  double y = 0.0;
  double bound = 0.0;  // lambda* <= bound
  SignConvention convention = SignConvention::Direct;
  double check_lambda = 0.0;   // certified feasible point used to check the direction
  double check_pairing = 0.0;  // constraint pairing there, must be >= 0
};

class WitnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WitnessOptions {
  double definiteness_margin = 0.0;  // required min eigenvalue of each block is > this
  double degenerate_s = 1e-9;
  int oracle_iters = 20000;
};

/// Checks positivity, structure and normalization of `w` against `t` and
/// returns the certified upper bound on the program value. Refuses to certify
/// when the inequality direction disagrees with a certified feasible point.
WitnessCertificate verify_witness(const Witness& w, const GaussianChannel& t, const WitnessOptions& opts = {});

}  // namespace gcert
