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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gcert/matcore.hpp"
#include "oracles.hpp"

using namespace gcert;

namespace {

ComplexMatrix i_sigma1() {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0, 1), Complex(0, -1), 0.0;
  return m;
}

}  // namespace

TEST_CASE("herm_eigen on small closed forms") {
  const HermitianEigen id = herm_eigen(HermitianMatrix(RealMatrix(RealMatrix::Identity(3, 3))));
  for (int k = 0; k < 3; ++k) CHECK(id.values(k) == doctest::Approx(1.0));

  RealMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  const HermitianEigen e = herm_eigen(HermitianMatrix(swap));
  CHECK(e.values(0) == doctest::Approx(-1.0));
  CHECK(e.values(1) == doctest::Approx(1.0));

  RealMatrix block(2, 2);
  block << 5, 3 * std::sqrt(2.0), 3 * std::sqrt(2.0), 4;
  const HermitianEigen b = herm_eigen(HermitianMatrix(block));
  CHECK(b.values(0) == doctest::Approx((9 - std::sqrt(73.0)) / 2).epsilon(1e-12));
  CHECK(b.values(1) == doctest::Approx((9 + std::sqrt(73.0)) / 2).epsilon(1e-12));
}

TEST_CASE("herm_eigen reconstruction and orthonormality on random input") {
  std::mt19937 rng(oracle::kSeed);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 16;
    const ComplexMatrix h = oracle::random_hermitian(rng, n);
    const HermitianEigen e = herm_eigen(HermitianMatrix(h));
    const ComplexMatrix rec = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    CHECK(max_abs(ComplexMatrix(rec - h)) <= 1e-10 * (1 + max_abs(h)));
    CHECK(unitarity_defect(e.vectors) <= 1e-10);
    for (int k = 1; k < n; ++k) CHECK(e.values(k - 1) <= e.values(k));
    CHECK(e.values(0) == doctest::Approx(oracle::min_eig(h)).epsilon(1e-9));
  }
}

TEST_CASE("HermitianMatrix rejects bad input") {
  RealMatrix r(2, 3);
  r.setZero();
  CHECK_THROWS_AS(HermitianMatrix{r}, ContractViolation);
  RealMatrix a(2, 2);
  a << 0, 1, 0, 0;
  CHECK_THROWS_AS(HermitianMatrix{a}, ContractViolation);
}

TEST_CASE("is_psd examples") {
  CHECK(is_psd(HermitianMatrix(RealMatrix(RealMatrix::Identity(2, 2))), 0.0));
  RealMatrix d(2, 2);
  d << 1, 0, 0, -1e-6;
  CHECK_FALSE(is_psd(HermitianMatrix(d), 1e-9));
  CHECK_FALSE(is_psd(HermitianMatrix(i_sigma1())));
  const HermitianEigen e = herm_eigen(HermitianMatrix(i_sigma1()));
  CHECK(e.values(0) == doctest::Approx(-1.0));
  CHECK(e.values(1) == doctest::Approx(1.0));
}

TEST_CASE("is_psd agrees with leading principal minors on definite matrices") {
  std::mt19937 rng(oracle::kSeed + 1);
  int agree = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexMatrix h = oracle::random_hermitian(rng, 4);
    // Shift away from singularity so strict definiteness is decidable.
    const double m = oracle::min_eig(h);
    const double shift = m > 0 ? 0.0 : (trial % 2 == 0 ? -m + 0.1 : -m - 0.1);
    const ComplexMatrix hs = h + shift * ComplexMatrix::Identity(4, 4);
    agree += is_psd(HermitianMatrix(hs), 0.0) == oracle::positive_definite_by_minors(hs);
  }
  CHECK(agree == 200);
}

TEST_CASE("complex_svd") {
  const SvdResult id = complex_svd(ComplexMatrix::Identity(3, 3));
  for (int k = 0; k < 3; ++k) CHECK(id.singular_values(k) == doctest::Approx(1.0));

  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = std::sqrt(2.0 / 3.0);
  d(1, 1) = std::sqrt(1.0 / 3.0);
  const SvdResult sd = complex_svd(d);
  CHECK(sd.singular_values(0) == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
  CHECK(sd.singular_values(1) == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-12));
  CHECK(std::abs(std::abs(sd.u(0, 0)) - 1.0) < 1e-12);
  CHECK(std::abs(std::abs(sd.v(1, 1)) - 1.0) < 1e-12);

  std::mt19937 rng(oracle::kSeed + 2);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 5;
    ComplexMatrix z = oracle::random_complex(rng, n);
    if (trial % 7 == 0 && n > 1) z.col(0) = z.col(1);  // rank deficient
    const SvdResult s = complex_svd(z);
    const ComplexMatrix rec = s.u * s.singular_values.cast<Complex>().asDiagonal() * s.v.adjoint();
    CHECK(max_abs(ComplexMatrix(rec - z)) <= 1e-10 * (1 + max_abs(z)));
    CHECK(unitarity_defect(s.u) <= 1e-10);
    CHECK(unitarity_defect(s.v) <= 1e-10);
    for (int k = 1; k < n; ++k) CHECK(s.singular_values(k - 1) >= s.singular_values(k));
    CHECK(s.singular_values.minCoeff() >= 0.0);
  }
}

TEST_CASE("psd_project") {
  RealMatrix d(2, 2);
  d << 2, 0, 0, -3;
  const ComplexMatrix p = psd_project(HermitianMatrix(d)).matrix();
  CHECK(std::abs(p(0, 0) - 2.0) < 1e-12);
  CHECK(std::abs(p(1, 1)) < 1e-12);

  const ComplexMatrix q = psd_project(HermitianMatrix(i_sigma1())).matrix();
  const ComplexMatrix expect = (ComplexMatrix::Identity(2, 2) + i_sigma1()) / 2.0;
  CHECK(max_abs(ComplexMatrix(q - expect)) < 1e-12);

  std::mt19937 rng(oracle::kSeed + 3);
  for (int trial = 0; trial < 40; ++trial) {
    const ComplexMatrix h = oracle::random_hermitian(rng, 1 + trial % 8);
    const HermitianMatrix once = psd_project(HermitianMatrix(h));
    CHECK(is_psd(once, 1e-10));
    const HermitianMatrix twice = psd_project(once);
    CHECK(max_abs(ComplexMatrix(twice.matrix() - once.matrix())) < 1e-10);
    const ComplexMatrix g = oracle::random_complex(rng, 1 + trial % 8);
    const ComplexMatrix psd = g * g.adjoint();
    CHECK(max_abs(ComplexMatrix(psd_project(HermitianMatrix(psd)).matrix() - psd)) < 1e-12 * (1 + max_abs(psd)));
  }
}
