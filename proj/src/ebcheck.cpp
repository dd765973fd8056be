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

#include "gcert/ebcheck.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gcert {

namespace {

constexpr double kDecompositionTol = 1e-8;

RealMatrix symmetrized(const RealMatrix& m) { return (m + m.transpose()) / 2.0; }

RealMatrix antisymmetrized(const RealMatrix& m) { return (m - m.transpose()) / 2.0; }

ComplexMatrix clip_below(const HermitianEigen& e, double floor) {
  const RealVector clipped = e.values.cwiseMax(floor);
  return e.vectors * clipped.cast<Complex>().asDiagonal() * e.vectors.adjoint();
}

// Turns the displacement (K - P) between the cone point and the affine point
// into a witness: share the real parts, keep the imaginary parts, then shift A
// until both blocks are strictly positive.
std::optional<Witness> witness_from_gap(const ComplexMatrix& w1, const ComplexMatrix& w2) {
  const double scale = std::max(max_abs(w1), max_abs(w2));
  if (!(scale > 0.0) || !std::isfinite(scale)) return std::nullopt;
  RealMatrix a = symmetrized((w1.real() + w2.real()) / (2.0 * scale));
  const RealMatrix b = antisymmetrized(w1.imag() / scale);
  const RealMatrix c = antisymmetrized(w2.imag() / scale);
  for (int attempt = 0; attempt < 3; ++attempt) {
    Witness w(a, b, c);
    const double lo = std::min(min_eigenvalue(HermitianMatrix(w.first_block())),
                               min_eigenvalue(HermitianMatrix(w.second_block())));
    if (lo > 0.0) return w;
    a += (-lo + 1e-12 * (1 + attempt * 10)) * RealMatrix::Identity(a.rows(), a.cols());
  }
  return std::nullopt;
}

}  // namespace

DecompositionCheck check_decomposition(const GaussianChannel& t, const EBDecomposition& d) {
  const RealMatrix sigma = symplectic_form(t.modes());
  DecompositionCheck c;
  c.m_margin = min_eigenvalue(HermitianMatrix::from_parts(d.m, -sigma));
  c.n_margin = min_eigenvalue(HermitianMatrix::from_parts(d.n, -t.x_sigma_xt()));
  c.residual = max_abs(RealMatrix(t.y() - d.m - d.n));
  return c;
}

EBDecomposition eb_decomposition_gauge(const GaussianChannel& t, double tol) {
  if (!is_gauge_covariant(t)) throw PreconditionError("eb_decomposition_gauge: channel is not gauge covariant");
  if (!is_ppt(t, tol)) throw PreconditionError("eb_decomposition_gauge: channel is not PPT");

  const GaugeSvd svd = symplectic_svd_gauge(t.x());
  const RealMatrix x_rot = svd.g * t.x() * svd.f;
  const RealMatrix y_rot = svd.g * t.y() * svd.g.transpose();
  const RealMatrix n_rot = x_rot * x_rot.transpose();
  const RealMatrix m_rot = y_rot - n_rot;

  EBDecomposition d;
  d.m = symmetrized(svd.g.transpose() * m_rot * svd.g);
  d.n = t.y() - d.m;
  return d;
}

std::string_view to_string(OracleOutcome o) {
  switch (o) {
    case OracleOutcome::Feasible: return "feasible";
    case OracleOutcome::Infeasible: return "infeasible";
    case OracleOutcome::Undecided: return "undecided";
  }
  return "undecided";
}

OracleResult feasibility_oracle(const GaussianChannel& t, double lambda, const OracleOptions& opts) {
  if (!(lambda >= 0.0)) throw ContractViolation("feasibility_oracle: lambda must be >= 0");
  const RealMatrix& y = t.y();
  const RealMatrix sigma_im = -lambda * symplectic_form(t.modes());
  const RealMatrix xsx_im = -lambda * t.x_sigma_xt();
  const LiftedChannel lifted = lift(t);
  // Projecting onto a slightly shrunken cone makes the iteration terminate
  // inside the true cone whenever the feasible set has interior.
  const double shrink = 1e-7 * (1.0 + max_abs(y));

  // Affine points are (S - i lambda sigma, Y - S - i lambda X sigma X^T), so
  // only the real symmetric S varies; the nearest one to (K1, K2) averages.
  auto affine_from = [&](const ComplexMatrix& k1, const ComplexMatrix& k2) {
    return symmetrized((k1.real() + y - k2.real()) / 2.0);
  };
  auto affine_block = [](const RealMatrix& re, const RealMatrix& im) {
    ComplexMatrix z(re.rows(), re.cols());
    z.real() = re;
    z.imag() = im;
    return z;
  };

  OracleResult out;
  const double tiny = 1e-12 * (1.0 + max_abs(y) + lambda * (1.0 + max_abs(t.x_sigma_xt())));
  if (lambda == 0.0 && min_eigenvalue(HermitianMatrix(y)) >= -opts.feas_tol) {
    out.outcome = OracleOutcome::Feasible;
    out.m = RealMatrix::Zero(y.rows(), y.cols());
    out.margin_first = 0.0;
    out.margin_second = min_eigenvalue(HermitianMatrix(y));
    return out;
  }
  // Necessary condition: the two constraints add up to Y - i lambda (sigma + X sigma X^T) >= 0.
  const HermitianEigen summed = herm_eigen(HermitianMatrix::from_parts(y, sigma_im + xsx_im));
  if (summed.values(0) < -tiny) {
    out.outcome = OracleOutcome::Infeasible;
    out.witness_bound = lambda;
    const ComplexMatrix vv = summed.vectors.col(0) * summed.vectors.col(0).adjoint();
    if (auto w = witness_from_gap(vv, vv)) {
      const WitnessPairing p = pair_with(*w, lifted);
      if (p.s > 0.0 && p.y / p.s < lambda) {
        out.witness = std::move(w);
        out.witness_bound = p.y / p.s;
      }
    }
    return out;
  }

  // Douglas-Rachford on the pair (affine set, product cone): z <- z + P_L(2 P_K z - z) - P_K z.
  ComplexMatrix z1 = affine_block(y / 2.0, sigma_im);
  ComplexMatrix z2 = affine_block(y / 2.0, xsx_im);
  for (int it = 0; it < opts.max_iters; ++it) {
    out.iterations = it + 1;
    const ComplexMatrix k1 = clip_below(herm_eigen(HermitianMatrix(z1)), shrink);
    const ComplexMatrix k2 = clip_below(herm_eigen(HermitianMatrix(z2)), shrink);
    const RealMatrix s = affine_from(2.0 * k1 - z1, 2.0 * k2 - z2);
    const ComplexMatrix p1 = affine_block(s, sigma_im);
    const ComplexMatrix p2 = affine_block(RealMatrix(y - s), xsx_im);

    out.margin_first = min_eigenvalue(HermitianMatrix(p1));
    out.margin_second = min_eigenvalue(HermitianMatrix(p2));
    if (out.margin_first >= -opts.feas_tol && out.margin_second >= -opts.feas_tol) {
      out.outcome = OracleOutcome::Feasible;
      out.m = s;
      return out;
    }

    const ComplexMatrix w1 = k1 - p1;
    const ComplexMatrix w2 = k2 - p2;
    out.gap = std::sqrt(w1.squaredNorm() + w2.squaredNorm());
    if (opts.witness_every > 0 && (it + 1) % opts.witness_every == 0) {
      if (auto w = witness_from_gap(w1, w2)) {
        const WitnessPairing p = pair_with(*w, lifted);
        if (p.s > 0.0) {
          const double bound = p.y / p.s;
          if (bound < lambda) {
            out.outcome = OracleOutcome::Infeasible;
            out.witness = std::move(w);
            out.witness_bound = bound;
            return out;
          }
        }
      }
    }
    z1 -= w1;
    z2 -= w2;
  }
  return out;
}

double lambda_cap(const GaussianChannel& t) {
  const int n = t.modes();
  const RealMatrix k = symplectic_form(n) + t.x_sigma_xt();
  const double tiny = 1e-12 * (1.0 + max_abs(t.y()) + max_abs(k));
  auto admissible = [&](double lambda) {
    return min_eigenvalue(HermitianMatrix::from_parts(t.y(), -lambda * k)) >= -tiny;
  };
  // tr M >= 2n lambda and tr (Y - M) >= 0 bound every feasible lambda.
  double hi = std::max(0.0, t.y().trace() / (2.0 * n));
  if (admissible(hi)) return hi;
  double lo = 0.0;
  for (int i = 0; i < 100 && hi - lo > 1e-15 * (1.0 + hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    (admissible(mid) ? lo : hi) = mid;
  }
  return hi;
}

std::string_view to_string(EbStatus s) {
  switch (s) {
    case EbStatus::EB: return "EB";
    case EbStatus::NotEB: return "NotEB";
    case EbStatus::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

SdpResult sdp_max_lambda(const GaussianChannel& t, const SdpOptions& opts) {
  if (!is_valid_channel(t)) throw PreconditionError("sdp_max_lambda: channel is not valid");
  const int dim = 2 * t.modes();

  SdpResult r;
  r.lambda_cap = lambda_cap(t);
  r.lambda_lo = 0.0;
  r.m_best = RealMatrix::Zero(dim, dim);
  r.lambda_hi = r.lambda_cap;

  bool probed_one = false;
  while (r.lambda_hi - r.lambda_lo > opts.tol_lambda && r.probes < opts.max_probes) {
    // The verdict hinges on lambda = 1, so settle that first.
    double lambda = 0.5 * (r.lambda_lo + r.lambda_hi);
    if (!probed_one && r.lambda_lo < 1.0 && r.lambda_hi > 1.0) lambda = 1.0;
    probed_one = true;

    const OracleResult o = feasibility_oracle(t, lambda, opts.oracle);
    ++r.probes;
    r.oracle_iterations += o.iterations;
    if (o.outcome == OracleOutcome::Feasible) {
      r.lambda_lo = lambda;
      r.m_best = o.m;
    } else if (o.outcome == OracleOutcome::Infeasible) {
      if (o.witness_bound < r.lambda_hi) {
        r.lambda_hi = std::max(o.witness_bound, r.lambda_lo);
        r.upper_witness = o.witness;
      }
    } else {
      break;
    }
  }
  r.converged = r.lambda_hi - r.lambda_lo <= opts.tol_lambda;
  if (r.lambda_lo >= 1.0) {
    r.status = EbStatus::EB;
  } else if (r.lambda_hi < 1.0) {
    r.status = EbStatus::NotEB;
  } else {
    r.status = EbStatus::Inconclusive;
  }
  return r;
}

std::string_view to_string(EbMethod m) {
  switch (m) {
    case EbMethod::Auto: return "auto";
    case EbMethod::Constructive: return "prop1";
    case EbMethod::Sdp: return "sdp";
  }
  return "auto";
}

EbMethod parse_eb_method(std::string_view s) {
  if (s == "auto") return EbMethod::Auto;
  if (s == "prop1") return EbMethod::Constructive;
  if (s == "sdp") return EbMethod::Sdp;
  throw ContractViolation("unknown EB method '" + std::string(s) + "' (expected auto, prop1 or sdp)");
}

EbVerdict is_eb(const GaussianChannel& t, EbMethod method, const SdpOptions& opts) {
  if (!is_valid_channel(t)) throw PreconditionError("is_eb: channel is not valid");
  EbVerdict v;
  v.gauge_covariant = is_gauge_covariant(t);
  v.ppt = is_ppt(t);

  if (method == EbMethod::Constructive && !v.gauge_covariant) {
    throw PreconditionError("is_eb: the constructive route requires a gauge-covariant channel");
  }
  if (method != EbMethod::Sdp && v.gauge_covariant) {
    v.route = EbMethod::Constructive;
    if (!v.ppt) {
      // Entanglement breaking implies PPT.
      v.status = EbStatus::NotEB;
      return v;
    }
    EBDecomposition d = eb_decomposition_gauge(t);
    const DecompositionCheck check = check_decomposition(t, d);
    v.decomposition = std::move(d);
    v.decomposition_check = check;
    if (check.ok(kDecompositionTol)) {
      v.status = EbStatus::EB;
      return v;
    }
    if (method == EbMethod::Constructive) {
      v.status = EbStatus::Inconclusive;
      return v;
    }
    v.decomposition.reset();
    v.decomposition_check.reset();
  }

  v.route = EbMethod::Sdp;
  SdpResult sdp = sdp_max_lambda(t, opts);
  v.status = sdp.status;
  if (sdp.status == EbStatus::EB) {
    // Feasibility at some lambda >= 1 implies feasibility at 1 with the same M.
    EBDecomposition d{sdp.m_best, RealMatrix(t.y() - sdp.m_best)};
    const DecompositionCheck check = check_decomposition(t, d);
    v.decomposition = std::move(d);
    v.decomposition_check = check;
    if (!check.ok(kDecompositionTol)) v.status = EbStatus::Inconclusive;
  }
  v.sdp = std::move(sdp);
  return v;
}

}  // namespace gcert
