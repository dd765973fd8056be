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

#include "gcert/registry.hpp"

#include <cmath>
#include <sstream>

namespace gcert {

namespace {

constexpr double kGenerationTol = 1e-12;

// 2x2 block matrix from a table of block scalars, each block c * I or c * Z
// with Z = diag(1, -1).
RealMatrix blocks(const std::vector<std::vector<double>>& coef, const std::vector<std::vector<int>>& flip = {}) {
  const auto m = static_cast<Eigen::Index>(coef.size());
  RealMatrix out = RealMatrix::Zero(2 * m, 2 * m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const double c = coef[i][j];
      const bool z = !flip.empty() && flip[i][j] != 0;
      out(2 * i, 2 * j) = c;
      out(2 * i + 1, 2 * j + 1) = z ? -c : c;
    }
  }
  return out;
}

double require_unit_interval(const std::optional<double>& v, double fallback, const char* what) {
  const double x = v.value_or(fallback);
  if (!(x >= 0.0 && x <= 1.0)) throw ContractViolation(std::string(what) + " must lie in [0, 1]");
  return x;
}

nlohmann::json meta(const std::string& name, const std::string& description) {
  return {{"name", name}, {"description", description}};
}

ChannelDocument channel_doc(GaussianChannel t, nlohmann::json m) {
  ChannelDocument doc;
  doc.kind = DocumentKind::Channel;
  doc.channel = std::move(t);
  doc.meta = std::move(m);
  return doc;
}

ChannelDocument paper_example() {
  DilationSpec d(paper_dilation_s(), CovarianceMatrix(paper_gamma_env()));
  const GaussianChannel closed = GaussianChannel::make(paper_x(), paper_y());
  const GaussianChannel induced = from_dilation(d);
  const double dx = max_abs(RealMatrix(closed.x() - induced.x()));
  const double dy = max_abs(RealMatrix(closed.y() - induced.y()));
  if (dx > kGenerationTol || dy > kGenerationTol * (1.0 + max_abs(closed.y()))) {
    std::ostringstream msg;
    msg << "paper-ssy-squeezed-env: stored (X, Y) disagree with the dilation (|dX| = " << dx << ", |dY| = " << dy
        << ")";
    throw std::logic_error(msg.str());
  }
  ChannelDocument doc;
  doc.kind = DocumentKind::Dilation;
  doc.dilation = std::move(d);
  doc.channel = closed;
  doc.meta = meta("paper-ssy-squeezed-env",
                  "Two system modes coupled by beamsplitters (transmittivities 2/3 and 1/3) to a squeezed "
                  "two-mode environment. PPT but not entanglement breaking.");
  doc.meta["exact"] = {
      {"S", "sqrt(1/3) * [[-sqrt2 I, 0, I, 0], [0, -I, 0, sqrt2 I], [I, 0, sqrt2 I, 0], [0, sqrt2 I, 0, I]]"},
      {"Gamma_E", "(3 + sqrt13)/2 * [[5,0,3,0],[0,5,0,-3],[3,0,2,0],[0,-3,0,2]]"},
      {"X", "sqrt(1/3) * diag(sqrt2, sqrt2, 1, 1)"},
      {"Y", "(3 + sqrt13)/6 * [[5,0,3sqrt2,0],[0,5,0,-3sqrt2],[3sqrt2,0,4,0],[0,-3sqrt2,0,4]]"}};
  return doc;
}

ChannelDocument thermal_beamsplitter(const ExampleParams& p) {
  const double t = require_unit_interval(p.t, 0.5, "thermal-beamsplitter: t");
  const double nu = p.nu.value_or(4.0);
  if (!(nu >= 1.0)) throw ContractViolation("thermal-beamsplitter: nu must be >= 1");
  // Environment mode first, then the system mode.
  DilationSpec d(beamsplitter(t, 0, 1, 2), CovarianceMatrix(nu * RealMatrix::Identity(2, 2)));
  ChannelDocument doc;
  doc.kind = DocumentKind::Dilation;
  doc.channel = from_dilation(d);
  doc.dilation = std::move(d);
  doc.meta = meta("thermal-beamsplitter", "Single mode mixed with a thermal mode (occupation nu) on a beamsplitter.");
  doc.meta["t"] = t;
  doc.meta["nu"] = nu;
  return doc;
}

}  // namespace

RealMatrix paper_dilation_s() {
  const double r2 = std::sqrt(2.0);
  return std::sqrt(1.0 / 3.0) * blocks({{-r2, 0, 1, 0}, {0, -1, 0, r2}, {1, 0, r2, 0}, {0, r2, 0, 1}});
}

RealMatrix paper_gamma_env() {
  const double k = (3.0 + std::sqrt(13.0)) / 2.0;
  return k * blocks({{5, 3}, {3, 2}}, {{0, 1}, {1, 0}});
}

RealMatrix paper_x() {
  const double r2 = std::sqrt(2.0);
  return std::sqrt(1.0 / 3.0) * blocks({{r2, 0}, {0, 1}});
}

RealMatrix paper_y() {
  const double k = (3.0 + std::sqrt(13.0)) / 6.0;
  const double c = 3.0 * std::sqrt(2.0);
  return k * blocks({{5, c}, {c, 4}}, {{0, 1}, {1, 0}});
}

const std::vector<ExampleEntry>& example_registry() {
  static const std::vector<ExampleEntry> entries{
      {"paper-ssy-squeezed-env", "", "PPT, not entanglement breaking; squeezed environment dilation"},
      {"identity", "modes=1", "identity channel X = I, Y = 0"},
      {"attenuator", "t=0.5, y=1-t", "X = sqrt(t) I, Y = y I"},
      {"measure-prepare", "modes=1, y=1", "X = 0, Y = y I (y >= 1)"},
      {"paper-witness", "", "dual witness with vectors a, b, c for the squeezed-environment example"},
      {"thermal-beamsplitter", "t=0.5, nu=4", "passive dilation: beamsplitter with a thermal environment"},
  };
  return entries;
}

ChannelDocument make_example(const std::string& name, const ExampleParams& p) {
  if (name == "paper-ssy-squeezed-env") return paper_example();
  if (name == "identity") {
    const int n = p.modes.value_or(1);
    if (n < 1) throw ContractViolation("identity: modes must be >= 1");
    return channel_doc(GaussianChannel::identity(n), meta("identity", "identity channel"));
  }
  if (name == "attenuator") {
    const double t = require_unit_interval(p.t, 0.5, "attenuator: t");
    const double y = p.y.value_or(1.0 - t);
    auto m = meta("attenuator", "attenuator with additive noise");
    m["t"] = t;
    m["y"] = y;
    return channel_doc(GaussianChannel::attenuator(t, y), std::move(m));
  }
  if (name == "measure-prepare") {
    const int n = p.modes.value_or(1);
    const double y = p.y.value_or(1.0);
    if (n < 1) throw ContractViolation("measure-prepare: modes must be >= 1");
    if (!(y >= 1.0)) throw ContractViolation("measure-prepare: y must be >= 1");
    auto m = meta("measure-prepare", "X = 0, Y = y I");
    m["y"] = y;
    return channel_doc(GaussianChannel::make(RealMatrix::Zero(2 * n, 2 * n), y * RealMatrix::Identity(2 * n, 2 * n)),
                       std::move(m));
  }
  if (name == "paper-witness") {
    ChannelDocument doc;
    doc.kind = DocumentKind::Witness;
    doc.witness_vectors = WitnessVectors{{0.512, 0.722, 0.592}, {-0.212, 0.552, -0.368}, {0.39, -0.3, 0.368}};
    doc.witness = paper_witness();
    doc.meta = meta("paper-witness", "certifies lambda* < 0.94 for paper-ssy-squeezed-env");
    return doc;
  }
  if (name == "thermal-beamsplitter") return thermal_beamsplitter(p);

  std::ostringstream msg;
  msg << "unknown example '" << name << "'; available:";
  for (const auto& e : example_registry()) msg << "\n  " << e.name << (e.parameters.empty() ? "" : " (" + e.parameters + ")");
  throw UnknownExample(msg.str());
}

}  // namespace gcert
