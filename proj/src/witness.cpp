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

#include "gcert/witness.hpp"

#include <cmath>
#include <string>

#include "gcert/ebcheck.hpp"

namespace gcert {

namespace {

constexpr Complex kI{0.0, 1.0};

ComplexMatrix block_diag(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

ComplexMatrix parts(const RealMatrix& re, const RealMatrix& im) {
  ComplexMatrix z(re.rows(), re.cols());
  z.real() = re;
  z.imag() = im;
  return z;
}

}  // namespace

ComplexMatrix LiftedChannel::x_tilde() const { return block_diag(x_first, x_second); }

ComplexMatrix LiftedChannel::y_tilde() const {
  return block_diag(ComplexMatrix::Zero(y_second.rows(), y_second.cols()), y_second);
}

LiftedChannel lift(const GaussianChannel& t) {
  LiftedChannel out;
  out.modes = t.modes();
  out.x_first = kI * symplectic_form(t.modes()).cast<Complex>();
  out.x_second = kI * t.x_sigma_xt().cast<Complex>();
  out.y_second = t.y().cast<Complex>();
  return out;
}

ComplexMatrix lifted_operand(const LiftedChannel& lifted, double lambda, const RealMatrix& m) {
  const ComplexMatrix mc = m.cast<Complex>();
  return lambda * lifted.x_tilde() + lifted.y_tilde() + block_diag(mc, -mc);
}

Witness::Witness(RealMatrix a, RealMatrix b, RealMatrix c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  const int dim = mode_count(a_, "Witness A") * 2;
  if (b_.rows() != dim || b_.cols() != dim || c_.rows() != dim || c_.cols() != dim) {
    throw ContractViolation("Witness: A, B and C must share one dimension");
  }
  if (!a_.allFinite() || !b_.allFinite() || !c_.allFinite()) throw ContractViolation("Witness: non-finite entries");
  const double scale = 1e-12 * (1.0 + std::max({max_abs(a_), max_abs(b_), max_abs(c_)}));
  if (max_abs(RealMatrix(a_ - a_.transpose())) > scale) throw ContractViolation("Witness: A is not symmetric");
  if (max_abs(RealMatrix(b_ + b_.transpose())) > scale) throw ContractViolation("Witness: B is not antisymmetric");
  if (max_abs(RealMatrix(c_ + c_.transpose())) > scale) throw ContractViolation("Witness: C is not antisymmetric");
}

Witness Witness::from_vectors(const std::array<double, 3>& a, const std::array<double, 3>& b,
                              const std::array<double, 3>& c) {
  RealMatrix am(4, 4);
  am << a[0], 0, -a[2], 0,
        0, a[0], 0, a[2],
        -a[2], 0, a[1], 0,
        0, a[2], 0, a[1];
  auto pattern = [](const std::array<double, 3>& v) {
    RealMatrix m(4, 4);
    m << 0, v[0], 0, v[2],
         -v[0], 0, v[2], 0,
         0, -v[2], 0, v[1],
         -v[2], 0, -v[1], 0;
    return m;
  };
  return Witness(am, pattern(b), pattern(c));
}

ComplexMatrix Witness::first_block() const { return parts(a_, b_); }
ComplexMatrix Witness::second_block() const { return parts(a_, c_); }
Witness Witness::conjugated() const { return Witness(a_, -b_, -c_); }

Witness paper_witness() {
  return Witness::from_vectors({0.512, 0.722, 0.592}, {-0.212, 0.552, -0.368}, {0.39, -0.3, 0.368});
}

double trace_pair(const Witness& w, const ComplexMatrix& first, const ComplexMatrix& second) {
  if (first.rows() != w.dim() || second.rows() != w.dim()) {
    throw ContractViolation("trace_pair: witness and operand dimensions differ");
  }
  return ((w.first_block() * first).trace() + (w.second_block() * second).trace()).real();
}

WitnessPairing pair_with(const Witness& w, const LiftedChannel& lifted) {
  WitnessPairing p;
  p.s = trace_pair(w, lifted.x_first, lifted.x_second);
  p.y = trace_pair(w, ComplexMatrix::Zero(w.dim(), w.dim()), lifted.y_second);
  return p;
}

double constraint_pairing(const Witness& w, const GaussianChannel& t, double lambda, const RealMatrix& m) {
  const RealMatrix sigma = symplectic_form(t.modes());
  const ComplexMatrix first = parts(m, -lambda * sigma);
  const ComplexMatrix second = parts(RealMatrix(t.y() - m), RealMatrix(-lambda * t.x_sigma_xt()));
  return trace_pair(w, first, second);
}

std::string_view to_string(SignConvention c) { return c == SignConvention::Direct ? "direct" : "conjugated"; }

WitnessCertificate verify_witness(const Witness& w, const GaussianChannel& t, const WitnessOptions& opts) {
  if (w.dim() != 2 * t.modes()) throw WitnessError("witness dimension does not match the channel");
  WitnessCertificate cert;
  cert.min_eig_first = min_eigenvalue(HermitianMatrix(w.first_block()));
  cert.min_eig_second = min_eigenvalue(HermitianMatrix(w.second_block()));
  if (!(cert.min_eig_first > opts.definiteness_margin && cert.min_eig_second > opts.definiteness_margin)) {
    throw WitnessError("witness is not positive definite (min eigenvalues " + std::to_string(cert.min_eig_first) +
                       ", " + std::to_string(cert.min_eig_second) + ")");
  }
  const RealMatrix diff = w.b() - w.c();
  cert.antisymmetry_defect = max_abs(RealMatrix(diff + diff.transpose()));

  const WitnessPairing p = pair_with(w, lift(t));
  cert.s = p.s;
  cert.y = p.y;
  if (!(std::abs(p.s) > opts.degenerate_s)) {
    throw WitnessError("witness normalization tr[Omega X~] is degenerate (" + std::to_string(p.s) + ")");
  }
  cert.convention = p.s > 0.0 ? SignConvention::Direct : SignConvention::Conjugated;
  cert.bound = p.y / std::abs(p.s);
  const Witness oriented = cert.convention == SignConvention::Direct ? w : w.conjugated();

  // Direction check at a certified feasible point; lambda = 0 with M = 0 is
  // always feasible for a valid channel and serves as the fallback.
  cert.check_lambda = 0.0;
  RealMatrix m = RealMatrix::Zero(2 * t.modes(), 2 * t.modes());
  OracleOptions oracle;
  oracle.max_iters = opts.oracle_iters;
  for (double fraction : {0.9, 0.5, 0.25}) {
    const double lambda = fraction * cert.bound;
    if (!(lambda > 0.0)) break;
    const OracleResult r = feasibility_oracle(t, lambda, oracle);
    if (r.outcome == OracleOutcome::Feasible) {
      cert.check_lambda = lambda;
      m = r.m;
      break;
    }
  }
  cert.check_pairing = constraint_pairing(oriented, t, cert.check_lambda, m);
  const double slack = 1e-8 * (1.0 + max_abs(t.y()));
  if (cert.check_pairing < -slack || cert.check_lambda > cert.bound + slack) {
    throw WitnessError("witness bound contradicts a certified feasible point at lambda = " +
                       std::to_string(cert.check_lambda));
  }
  return cert;
}

}  // namespace gcert
