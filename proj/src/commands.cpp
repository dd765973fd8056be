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

#include "gcert/commands.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gcert/document.hpp"
#include "gcert/ebcheck.hpp"
#include "gcert/registry.hpp"
#include "gcert/screening.hpp"
#include "gcert/witness.hpp"

namespace gcert {

using nlohmann::json;

namespace {

struct GlobalFlags {
  double tol = kDefaultPsdTol;
  bool json = false;
  int max_iters = OracleOptions{}.max_iters;
};

// Input problems that are not schema errors (missing files, bad flags).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ChannelDocument load(const std::string& path, const ParseOptions& opts = {}) {
  try {
    return parse_document(read_file(path), opts);
  } catch (const DocumentError& e) {
    throw InputError(path + ": " + e.what());
  }
}

GaussianChannel load_channel(const std::string& path, const GlobalFlags& g) {
  const ChannelDocument doc = load(path, ParseOptions{g.tol, true});
  if (doc.kind == DocumentKind::Witness) throw InputError(path + ": expected a channel or dilation document");
  return doc.resolve_channel();
}

SdpOptions sdp_options(const GlobalFlags& g) {
  SdpOptions o;
  o.oracle.max_iters = g.max_iters;
  return o;
}

json tolerances(const GlobalFlags& g) {
  return {{"psd", g.tol}, {"commutant", kCommutantTol}, {"decomposition", 1e-8}};
}

void emit(std::ostream& out, const GlobalFlags& g, const json& payload, const std::string& text) {
  if (g.json) {
    out << payload.dump(2) << "\n";
  } else {
    out << text;
  }
}

json decomposition_json(const EBDecomposition& d, const DecompositionCheck& c) {
  return {{"M", matrix_to_json(d.m)},
          {"N", matrix_to_json(d.n)},
          {"m_margin", c.m_margin},
          {"n_margin", c.n_margin},
          {"residual", c.residual}};
}

json witness_json(const Witness& w) {
  return {{"A", matrix_to_json(w.a())}, {"B", matrix_to_json(w.b())}, {"C", matrix_to_json(w.c())}};
}

int cmd_check(const std::string& file, const GlobalFlags& g, std::ostream& out) {
  const ChannelDocument doc = load(file, ParseOptions{g.tol, false});
  if (doc.kind == DocumentKind::Witness) throw InputError(file + ": expected a channel or dilation document");
  const GaussianChannel t = doc.resolve_channel();
  const bool valid = is_valid_channel(t, g.tol);
  const double margin = validity_margin(t);
  const bool gauge = is_gauge_covariant(t);

  json j{{"command", "check"},
         {"file", file},
         {"verdict", {{"valid", valid}, {"gauge_covariant", gauge}}},
         {"certificate", {{"cp_margin", margin}}},
         {"tolerances", tolerances(g)}};
  std::ostringstream s;
  s << "valid channel: " << yes_no(valid) << " (min eigenvalue of Y + i(sigma - X sigma X^T) = " << margin
    << ", tol " << g.tol << ")\n";
  s << "gauge covariant: " << yes_no(gauge) << " (tol " << kCommutantTol << ")\n";
  if (doc.dilation) {
    const bool passive = is_passive_channel(*doc.dilation);
    const bool squeezed = is_squeezed(doc.dilation->gamma_env(), g.tol);
    j["verdict"]["passive"] = passive;
    j["verdict"]["squeezed_environment"] = squeezed;
    s << "passive dilation: " << yes_no(passive) << "\n";
    s << "squeezed environment: " << yes_no(squeezed) << "\n";
  }
  emit(out, g, j, s.str());
  return kExitVerdict;
}

int cmd_ppt(const std::string& file, const GlobalFlags& g, std::ostream& out) {
  const GaussianChannel t = load_channel(file, g);
  const bool ppt = is_ppt(t, g.tol);
  const double margin = ppt_margin(t);
  json j{{"command", "ppt"},
         {"file", file},
         {"verdict", {{"ppt", ppt}}},
         {"certificate", {{"ppt_margin", margin}}},
         {"tolerances", tolerances(g)}};
  std::ostringstream s;
  s << "PPT: " << yes_no(ppt) << " (min eigenvalue of Y - i(sigma + X sigma X^T) = " << margin << ", tol " << g.tol
    << ")\n";
  emit(out, g, j, s.str());
  return kExitVerdict;
}

int cmd_eb(const std::string& file, const std::string& method_name, const GlobalFlags& g, std::ostream& out) {
  EbMethod method;
  try {
    method = parse_eb_method(method_name);
  } catch (const ContractViolation& e) {
    throw InputError(e.what());
  }
  const GaussianChannel t = load_channel(file, g);
  const SdpOptions opts = sdp_options(g);
  EbVerdict v;
  try {
    v = is_eb(t, method, opts);
  } catch (const PreconditionError& e) {
    throw InputError(file + ": " + e.what());
  }

  json j{{"command", "eb"},
         {"file", file},
         {"verdict",
          {{"status", std::string(to_string(v.status))},
           {"route", std::string(to_string(v.route))},
           {"gauge_covariant", v.gauge_covariant},
           {"ppt", v.ppt}}},
         {"certificate", json::object()},
         {"tolerances", tolerances(g)}};
  j["tolerances"]["lambda"] = opts.tol_lambda;
  j["tolerances"]["oracle_feasibility"] = opts.oracle.feas_tol;

  std::ostringstream s;
  s << "EB: ";
  switch (v.status) {
    case EbStatus::EB: s << "true"; break;
    case EbStatus::NotEB: s << "false"; break;
    case EbStatus::Inconclusive: s << "inconclusive"; break;
  }
  if (v.sdp) {
    const SdpResult& r = *v.sdp;
    s << "; lambda* in [" << r.lambda_lo << ", " << r.lambda_hi << "]";
    j["certificate"]["bracket"] = {{"lambda_lo", r.lambda_lo},
                                   {"lambda_hi", r.lambda_hi},
                                   {"lambda_cap", r.lambda_cap},
                                   {"converged", r.converged},
                                   {"m_best", matrix_to_json(r.m_best)}};
    if (r.upper_witness) j["certificate"]["upper_witness"] = witness_json(*r.upper_witness);
    j["iterations"] = {{"probes", r.probes}, {"oracle", r.oracle_iterations}};
  }
  s << " (route " << to_string(v.route) << ")\n";
  s << "gauge covariant: " << yes_no(v.gauge_covariant) << ", PPT: " << yes_no(v.ppt) << "\n";
  if (v.sdp) {
    const SdpResult& r = *v.sdp;
    s << "upper bound source: " << (r.upper_witness ? "dual witness" : "summed constraint") << ", lambda_cap "
      << r.lambda_cap << "\n";
    s << "probes: " << r.probes << ", oracle iterations: " << r.oracle_iterations << "\n";
  }
  if (v.route == EbMethod::Constructive && !v.ppt) {
    j["certificate"]["ppt_margin"] = ppt_margin(t);
    s << "certificate: not PPT (margin " << ppt_margin(t) << "), hence not entanglement breaking\n";
  }
  if (v.decomposition && v.decomposition_check) {
    const DecompositionCheck& c = *v.decomposition_check;
    j["certificate"]["decomposition"] = decomposition_json(*v.decomposition, c);
    s << "certificate: Y = M + N with min eig(M - i sigma) = " << c.m_margin
      << ", min eig(N - i X sigma X^T) = " << c.n_margin << ", residual " << c.residual << "\n";
  }
  emit(out, g, j, s.str());
  return v.status == EbStatus::Inconclusive ? kExitInconclusive : kExitVerdict;
}

int cmd_witness(const std::string& channel_file, const std::string& witness_file, const GlobalFlags& g,
                std::ostream& out, std::ostream& err) {
  const GaussianChannel t = load_channel(channel_file, g);
  const ChannelDocument wdoc = load(witness_file);
  if (wdoc.kind != DocumentKind::Witness) throw InputError(witness_file + ": expected a witness document");
  WitnessOptions opts;
  opts.oracle_iters = g.max_iters;
  WitnessCertificate c;
  try {
    c = verify_witness(*wdoc.witness, t, opts);
  } catch (const ContractViolation& e) {
    throw InputError(witness_file + ": " + e.what());
  } catch (const WitnessError& e) {
    err << "refused: " << e.what() << "\n";
    if (g.json) {
      out << json{{"command", "witness"}, {"verdict", {{"certified", false}, {"reason", e.what()}}}}.dump(2) << "\n";
    }
    return kExitInconclusive;
  }
  const bool not_eb = c.bound < 1.0;
  json j{{"command", "witness"},
         {"channel", channel_file},
         {"witness", witness_file},
         {"verdict", {{"certified", true}, {"bound", c.bound}, {"not_eb", not_eb}}},
         {"certificate",
          {{"min_eig_first", c.min_eig_first},
           {"min_eig_second", c.min_eig_second},
           {"antisymmetry_defect", c.antisymmetry_defect},
           {"s", c.s},
           {"y", c.y},
           {"convention", std::string(to_string(c.convention))},
           {"check_lambda", c.check_lambda},
           {"check_pairing", c.check_pairing}}},
         {"tolerances", {{"definiteness_margin", opts.definiteness_margin}, {"degenerate_s", opts.degenerate_s}}}};
  std::ostringstream s;
  s << "(i)   min eig(A + iB) = " << c.min_eig_first << ", min eig(A + iC) = " << c.min_eig_second << "\n";
  s << "(ii)  max |(B - C) + (B - C)^T| = " << c.antisymmetry_defect << "\n";
  s << "(iii) s = tr[Omega X~] = " << c.s << "\n";
  s << "(iv)  y = tr[Omega Y~] = " << c.y << "\n";
  s << "convention: " << to_string(c.convention) << " (pairing " << c.check_pairing << " >= 0 at feasible lambda "
    << c.check_lambda << ")\n";
  s << "certified: lambda* <= " << c.bound;
  if (not_eb) s << " (< 1: not entanglement breaking)";
  s << "\n";
  emit(out, g, j, s.str());
  return kExitVerdict;
}

json classification_json(const ChannelClassification& c) {
  json j{{"gauge_covariant", c.gauge_covariant}, {"ppt", c.ppt}, {"eb", std::string(to_string(c.eb))}};
  j["passive"] = c.passive ? json(*c.passive) : json("unknown");
  return j;
}

int cmd_pair(const std::string& f1, const std::string& f2, const GlobalFlags& g, std::ostream& out) {
  const SdpOptions opts = sdp_options(g);
  auto classify_file = [&](const std::string& f) {
    const ChannelDocument doc = load(f, ParseOptions{g.tol, true});
    if (doc.kind == DocumentKind::Witness) throw InputError(f + ": expected a channel or dilation document");
    return classify(doc, opts, g.tol);
  };
  const ScreeningReport r = screen_pair(classify_file(f1), classify_file(f2));
  json j{{"command", "pair"},
         {"files", {f1, f2}},
         {"verdict", std::string(to_string(r.verdict))},
         {"certificate", {{"first", classification_json(r.first)}, {"second", classification_json(r.second)}}},
         {"trace", r.trace},
         {"tolerances", tolerances(g)}};
  std::ostringstream s;
  s << "verdict: " << to_string(r.verdict) << "\n";
  for (const auto& line : r.trace) s << "  " << line << "\n";
  emit(out, g, j, s.str());
  return kExitVerdict;
}

int cmd_example(const std::string& name, const ExampleParams& p, const std::string& output, std::ostream& out) {
  ChannelDocument doc;
  try {
    doc = make_example(name, p);
  } catch (const UnknownExample& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(name + ": " + e.what());
  }
  const std::string text = emit_document(doc) + "\n";
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw InputError(output + ": cannot write file");
    f << text;
    out << "wrote " << output << "\n";
  }
  return kExitVerdict;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certification toolkit for Gaussian channels", "gcert"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalFlags g;
  app.add_option("--tol", g.tol, "PSD tolerance on eigenvalues")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--max-iters", g.max_iters, "feasibility oracle iteration budget")->check(CLI::PositiveNumber);

  std::string file, file2, method = "auto", channel_file, witness_file, example_name, output;
  ExampleParams params;
  double t = 0, y = 0, nu = 0;
  int modes = 0;

  auto* check = app.add_subcommand("check", "complete positivity and gauge covariance");
  check->add_option("file", file, "channel or dilation document")->required();
  auto* ppt = app.add_subcommand("ppt", "PPT test");
  ppt->add_option("file", file, "channel or dilation document")->required();
  auto* eb = app.add_subcommand("eb", "entanglement-breaking verdict");
  eb->add_option("file", file, "channel or dilation document")->required();
  eb->add_option("--method", method, "auto, prop1 or sdp");
  auto* wit = app.add_subcommand("witness", "verify a dual witness");
  wit->add_option("--channel", channel_file, "channel or dilation document")->required();
  wit->add_option("--witness", witness_file, "witness document")->required();
  auto* pair = app.add_subcommand("pair", "screen a channel pair");
  pair->add_option("file1", file, "first dilation document")->required();
  pair->add_option("file2", file2, "second dilation document")->required();
  auto* ex = app.add_subcommand("example", "write a built-in example document");
  ex->add_option("name", example_name, "registry entry")->required();
  ex->add_option("-o,--output", output, "output path (default stdout)");
  auto* opt_t = ex->add_option("--t", t, "transmittivity");
  auto* opt_y = ex->add_option("--y", y, "noise");
  auto* opt_nu = ex->add_option("--nu", nu, "thermal occupation");
  auto* opt_modes = ex->add_option("--modes", modes, "mode count");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitVerdict;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*check) return cmd_check(file, g, out);
    if (*ppt) return cmd_ppt(file, g, out);
    if (*eb) return cmd_eb(file, method, g, out);
    if (*wit) return cmd_witness(channel_file, witness_file, g, out, err);
    if (*pair) return cmd_pair(file, file2, g, out);
    if (*ex) {
      if (*opt_t) params.t = t;
      if (*opt_y) params.y = y;
      if (*opt_nu) params.nu = nu;
      if (*opt_modes) params.modes = modes;
      return cmd_example(example_name, params, output, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace gcert
