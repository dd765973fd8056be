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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gcert/commands.hpp"
#include "gcert/document.hpp"
#include "gcert/registry.hpp"
#include "gcert/screening.hpp"

using namespace gcert;

namespace {

const std::string kFixtures = GCERT_FIXTURE_DIR;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name + ".json"; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("gcert_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::string path_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const DocumentError& e) {
    return e.path();
  }
  return "";
}

}  // namespace

TEST_CASE("parse identity channel") {
  const ChannelDocument d = parse_document(R"({"kind": "channel", "modes": 1, "X": [[1, 0], [0, 1]], "Y": [[0, 0], [0, 0]]})");
  REQUIRE(d.channel.has_value());
  CHECK(d.channel->x() == RealMatrix::Identity(2, 2));
  CHECK(d.channel->y() == RealMatrix::Zero(2, 2));
  CHECK(d.ordering == Ordering::ModeMajor);
}

TEST_CASE("squeezed-environment fixture matches the closed form") {
  const ChannelDocument d = parse_document(slurp(fixture("paper-ssy-squeezed-env")));
  CHECK(d.kind == DocumentKind::Dilation);
  const GaussianChannel t = d.resolve_channel();
  CHECK(max_abs(RealMatrix(t.x() - paper_x())) <= 1e-15);
  CHECK(max_abs(RealMatrix(t.y() - paper_y())) <= 1e-15);
  const GaussianChannel induced = from_dilation(*d.dilation);
  CHECK(max_abs(RealMatrix(induced.x() - t.x())) <= 1e-12);
  CHECK(max_abs(RealMatrix(induced.y() - t.y())) <= 1e-12);
  const double k = (3 + std::sqrt(13.0)) / 2;
  CHECK(d.dilation->gamma_env().matrix()(0, 0) == doctest::Approx(5 * k).epsilon(1e-15));
  CHECK(d.dilation->gamma_env().matrix()(1, 3) == doctest::Approx(-3 * k).epsilon(1e-15));
}

TEST_CASE("round trip and regeneration of shipped fixtures") {
  for (const auto& e : example_registry()) {
    CAPTURE(e.name);
    const std::string text = slurp(fixture(e.name));
    REQUIRE_FALSE(text.empty());
    CHECK(emit_document(parse_document(text)) == normalize_document_text(text));
    CHECK(emit_document(make_example(e.name)) + "\n" == text);
  }
}

TEST_CASE("block-major documents round trip through the internal order") {
  const std::string text = R"({"kind": "channel", "modes": 2, "ordering": "block-major",
    "X": [[1, 0, 0.5, 0], [0, 1, 0, 0], [-0.5, 0, 1, 0], [0, 0, 0, 1]],
    "Y": [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]]})";
  const ChannelDocument d = parse_document(text);
  CHECK(d.channel->x()(0, 1) == 0.5);  // (Q1, P1) entry in mode-major order
  CHECK(emit_document(d) == normalize_document_text(text));
}

TEST_CASE("schema diagnostics name the field") {
  CHECK(path_of("[1, 2]") == "$");
  CHECK(path_of("{") == "$");
  CHECK(path_of(R"({"modes": 1})") == "$.kind");
  CHECK(path_of(R"({"kind": "banana"})") == "$.kind");
  CHECK(path_of(R"({"kind": "channel", "modes": 0})") == "$.modes");
  CHECK(path_of(R"({"kind": "channel", "modes": 1, "X": [[1, 0], [0, 1]], "Y": [[0, 0]]})") == "$.Y");
  CHECK(path_of(R"({"kind": "channel", "modes": 1, "X": [[1, 0], [0, 1]], "Y": [[0, 0], [0]]})") == "$.Y[1]");
  CHECK(path_of(R"({"kind": "channel", "modes": 1, "X": [[1, 0], [0, 1]], "Y": [[0, 0], [0, null]]})") == "$.Y[1][1]");
  CHECK(path_of(R"({"kind": "channel", "modes": 1, "X": [[1, 0], [0, 1]], "Y": [[1, 0], [0.5, 1]]})") == "$.Y");
  CHECK(path_of(R"({"kind": "channel", "modes": 1, "X": [[1, 0], [0, 1]], "Y": [[0, 0], [0, 0]], "Z": 1})") == "$.Z");
  CHECK(path_of(R"({"kind": "channel", "modes": 1, "ordering": "diagonal", "X": [[1, 0], [0, 1]], "Y": [[0, 0], [0, 0]]})") ==
        "$.ordering");
  CHECK(path_of(R"({"kind": "witness", "a": [1, 2], "b": [0, 0, 0], "c": [0, 0, 0]})") == "$.a");
  CHECK(path_of(R"({"kind": "dilation", "modes": 1, "env_modes": 1, "S": [[2,0,0,0],[0,2,0,0],[0,0,1,0],[0,0,0,1]],
    "Gamma_E": [[1, 0], [0, 1]]})") == "$.S");
  CHECK(path_of(R"({"kind": "dilation", "modes": 1, "env_modes": 1, "S": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
    "Gamma_E": [[0.5, 0], [0, 0.5]]})") == "$.Gamma_E");
  CHECK(path_of(R"({"kind": "dilation", "modes": 1, "env_modes": 1, "S": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
    "Gamma_E": [[1, 0], [0, 1]], "X": [[1, 0], [0, 1]], "Y": [[0.1, 0], [0, 0.1]]})") == "$.Y");

  try {
    parse_document(R"({"kind": "channel", "modes": 1, "X": [[1, 0], [0, 1]], "Y": [[1, 0], [0.5, 1]]})");
  } catch (const DocumentError& e) {
    CHECK(std::string(e.what()).find("symmetric") != std::string::npos);
  }
  try {
    parse_document(R"({"kind": "channel", "modes": 1, "X": [[1, 0], [0, 1]], "Y": [[-1, 0], [0, -1]]})");
    FAIL("expected an invariant violation");
  } catch (const DocumentError& e) {
    CHECK(std::string(e.what()).find("invariant violated") != std::string::npos);
  }
}

TEST_CASE("examples reject bad parameters") {
  CHECK_THROWS_AS(make_example("nope"), UnknownExample);
  ExampleParams p;
  p.t = 1.5;
  CHECK_THROWS_AS(make_example("attenuator", p), ContractViolation);
  p = {};
  p.y = 0.5;
  CHECK_THROWS_AS(make_example("measure-prepare", p), ContractViolation);
  p = {};
  p.t = 0.5;
  p.y = 0.1;
  CHECK_THROWS_AS(make_example("attenuator", p), InvalidChannel);
}

TEST_CASE("pair screening decision table") {
  auto cls = [](std::optional<bool> passive, bool gauge, bool ppt, EbStatus eb) {
    ChannelClassification c;
    c.passive = passive;
    c.gauge_covariant = gauge;
    c.ppt = ppt;
    c.eb = eb;
    return c;
  };
  const auto passive_ppt = cls(true, true, true, EbStatus::EB);
  const auto passive_not_ppt = cls(true, true, false, EbStatus::NotEB);
  const auto ppt_not_eb = cls(false, false, true, EbStatus::NotEB);
  const auto eb_channel = cls(std::nullopt, true, true, EbStatus::EB);
  const auto plain = cls(std::nullopt, true, false, EbStatus::NotEB);

  CHECK(screen_pair(passive_ppt, passive_not_ppt).verdict == PairVerdict::SuperActivationImpossible);
  CHECK(screen_pair(passive_not_ppt, passive_ppt).verdict == PairVerdict::SuperActivationImpossible);
  CHECK(screen_pair(passive_not_ppt, passive_not_ppt).verdict == PairVerdict::OutsideKnownFramework);
  CHECK(screen_pair(ppt_not_eb, eb_channel).verdict == PairVerdict::StandardFrameworkCandidate);
  CHECK(screen_pair(eb_channel, ppt_not_eb).verdict == PairVerdict::StandardFrameworkCandidate);
  CHECK(screen_pair(plain, eb_channel).verdict == PairVerdict::OutsideKnownFramework);
  CHECK(screen_pair(plain, plain).verdict == PairVerdict::OutsideKnownFramework);
  CHECK(screen_pair(ppt_not_eb, cls(std::nullopt, false, true, EbStatus::Inconclusive)).verdict ==
        PairVerdict::OutsideKnownFramework);

  const ScreeningReport r = screen_pair(passive_ppt, passive_not_ppt);
  bool names_symext = false;
  for (const auto& line : r.trace) names_symext = names_symext || line.find("symmetric extension") != std::string::npos;
  CHECK(names_symext);
}

TEST_CASE("cli verdicts and exit codes") {
  const std::string squeezed = fixture("paper-ssy-squeezed-env");
  Run r = run({"ppt", squeezed});
  CHECK(r.code == kExitVerdict);
  CHECK(r.out.find("PPT: true") != std::string::npos);

  r = run({"check", squeezed});
  CHECK(r.code == kExitVerdict);
  CHECK(r.out.find("valid channel: true") != std::string::npos);
  CHECK(r.out.find("passive dilation: false") != std::string::npos);

  r = run({"eb", "--method", "sdp", squeezed});
  CHECK(r.code == kExitVerdict);
  CHECK(r.out.find("EB: false; lambda* in [") != std::string::npos);

  r = run({"witness", "--channel", squeezed, "--witness", fixture("paper-witness")});
  CHECK(r.code == kExitVerdict);
  CHECK(r.out.find("certified: lambda* <= 0.935") != std::string::npos);

  r = run({"eb", squeezed, "--json", "--tol", "1e-10"});
  CHECK(r.code == kExitVerdict);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"]["status"] == "NotEB");
  CHECK(j["certificate"]["bracket"]["lambda_hi"].get<double>() < 0.94);
  CHECK(j["tolerances"]["psd"].get<double>() == 1e-10);
  CHECK(j["iterations"]["oracle"].get<long>() > 0);

  r = run({"eb", fixture("measure-prepare"), "--json"});
  CHECK(nlohmann::json::parse(r.out)["certificate"].contains("decomposition"));

  r = run({"pair", squeezed, fixture("measure-prepare")});
  CHECK(r.code == kExitVerdict);
  CHECK(r.out.find("StandardFrameworkCandidate") != std::string::npos);
  r = run({"pair", fixture("identity"), squeezed});
  CHECK(r.out.find("OutsideKnownFramework") != std::string::npos);

  // Forced Inconclusive through a tiny oracle budget.
  r = run({"--max-iters", "3", "eb", squeezed});
  CHECK(r.code == kExitInconclusive);
  CHECK(r.out.find("EB: inconclusive") != std::string::npos);

  // Refused witness.
  const std::string flat = write_temp("flat.json", R"({"kind": "witness", "a": [1, 1, 0], "b": [0, 0, 0], "c": [0, 0, 0]})");
  r = run({"witness", "--channel", squeezed, "--witness", flat});
  CHECK(r.code == kExitInconclusive);
  CHECK(r.err.find("refused") != std::string::npos);

  // Input errors.
  CHECK(run({}).code == kExitInputError);
  CHECK(run({"ppt"}).code == kExitInputError);
  CHECK(run({"ppt", "/nonexistent/file.json"}).code == kExitInputError);
  CHECK(run({"eb", "--method", "magic", squeezed}).code == kExitInputError);
  CHECK(run({"eb", "--method", "prop1", squeezed}).code == kExitInputError);
  CHECK(run({"witness", "--channel", squeezed, "--witness", squeezed}).code == kExitInputError);
  const std::string broken = write_temp("broken.json", R"({"kind": "channel", "modes": 1, "X": [[1, 0]], "Y": []})");
  r = run({"ppt", broken});
  CHECK(r.code == kExitInputError);
  CHECK(r.err.find("$.X") != std::string::npos);
  r = run({"example", "nope"});
  CHECK(r.code == kExitInputError);
  CHECK(r.err.find("paper-ssy-squeezed-env") != std::string::npos);

  // check reports a non-CP channel as a verdict rather than an input error.
  const std::string noncp = write_temp("noncp.json", R"({"kind": "channel", "modes": 1, "X": [[2, 0], [0, 2]], "Y": [[0.1, 0], [0, 0.1]]})");
  r = run({"check", noncp});
  CHECK(r.code == kExitVerdict);
  CHECK(r.out.find("valid channel: false") != std::string::npos);
  CHECK(run({"ppt", noncp}).code == kExitInputError);

  // Deterministic output.
  CHECK(run({"eb", squeezed, "--json"}).out == run({"eb", squeezed, "--json"}).out);

  r = run({"example", "attenuator", "--t", "0.5"});
  CHECK(r.code == kExitVerdict);
  const ChannelDocument att = parse_document(r.out);
  CHECK(att.channel->x()(0, 0) == doctest::Approx(std::sqrt(0.5)));
  CHECK(att.channel->y()(1, 1) == doctest::Approx(0.5));
}
