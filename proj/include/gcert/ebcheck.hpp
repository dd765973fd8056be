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

#include <optional>
#include <string>
#include <string_view>

#include "gcert/channel.hpp"
#include "gcert/witness.hpp"

namespace gcert {

/// Y = M + N with M >= i sigma and N >= i X sigma X^T.
struct EBDecomposition {
  RealMatrix m;
  RealMatrix n;
};

struct DecompositionCheck {
  double m_margin = 0.0;  // min eigenvalue of M - i sigma
  double n_margin = 0.0;  // min eigenvalue of N - i X sigma X^T
  double residual = 0.0;  // max |Y - M - N|
  bool ok(double tol) const { return m_margin >= -tol && n_margin >= -tol && residual <= tol; }
};

DecompositionCheck check_decomposition(const GaussianChannel& t, const EBDecomposition& d);

/// A channel failed a predicate required by an operation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Constructive decomposition for gauge-covariant PPT channels: rotate to
/// X' = X_hat (+) X_hat, split Y' = (Y' - X'^2) + X'^2, rotate back.
/// Throws PreconditionError naming the predicate that failed.
EBDecomposition eb_decomposition_gauge(const GaussianChannel& t, double tol = kDefaultPsdTol);

enum class OracleOutcome { Feasible, Infeasible, Undecided };
std::string_view to_string(OracleOutcome o);

struct OracleOptions {
  int max_iters = 20000;
  double feas_tol = 1e-9;  // accepted LMI violation on a returned M
  int witness_every = 20;
};

struct OracleResult {
  OracleOutcome outcome = OracleOutcome::Undecided;
  RealMatrix m;                    // Feasible: certified M
  double margin_first = 0.0;       // min eigenvalue of M - i lambda sigma
  double margin_second = 0.0;      // min eigenvalue of Y - M - i lambda X sigma X^T
  std::optional<Witness> witness;  // Infeasible: separating witness
  double witness_bound = 0.0;      // Infeasible: lambda* <= witness_bound < lambda
  double gap = 0.0;                // last distance between the two projections
  int iterations = 0;
};

/// Decides feasibility of the constraint pair at fixed lambda by
/// Douglas-Rachford splitting between the affine set
/// {(M - i lambda sigma, Y - M - i lambda X sigma X^T)} and the product PSD
/// cone. Infeasibility is reported only with a certificate: either the summed
/// constraint fails outright, or the fixed-point residual yields a witness
/// whose bound lies below lambda.
OracleResult feasibility_oracle(const GaussianChannel& t, double lambda, const OracleOptions& opts = {});

/// Largest lambda with Y - i lambda (sigma + X sigma X^T) >= 0, a necessary
/// condition obtained by adding the two constraints.
double lambda_cap(const GaussianChannel& t);

enum class EbStatus { EB, NotEB, Inconclusive };
std::string_view to_string(EbStatus s);

struct SdpOptions {
  double tol_lambda = 1e-3;
  int max_probes = 64;
  OracleOptions oracle;
};

struct SdpResult {
  double lambda_lo = 0.0;
  double lambda_hi = 0.0;
  RealMatrix m_best;                     // feasible at lambda_lo
  EbStatus status = EbStatus::Inconclusive;
  double lambda_cap = 0.0;
  std::optional<Witness> upper_witness;  // set when lambda_hi came from a witness
  int probes = 0;
  long oracle_iterations = 0;
  bool converged = false;                // lambda_hi - lambda_lo <= tol_lambda
};

/// Brackets the program value by bisection. Status EB needs lambda_lo >= 1,
/// NotEB needs lambda_hi < 1; everything else is Inconclusive.
SdpResult sdp_max_lambda(const GaussianChannel& t, const SdpOptions& opts = {});

enum class EbMethod { Auto, Constructive, Sdp };
std::string_view to_string(EbMethod m);
/// "auto", "prop1" or "sdp".
EbMethod parse_eb_method(std::string_view s);

struct EbVerdict {
  EbStatus status = EbStatus::Inconclusive;
  EbMethod route = EbMethod::Auto;  // the route that produced the verdict
  bool gauge_covariant = false;
  bool ppt = false;
  std::optional<EBDecomposition> decomposition;
  std::optional<DecompositionCheck> decomposition_check;
  std::optional<SdpResult> sdp;
};

EbVerdict is_eb(const GaussianChannel& t, EbMethod method = EbMethod::Auto, const SdpOptions& opts = {});

}  // namespace gcert
