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

#include "gcert/document.hpp"

#include <initializer_list>
#include <set>

namespace gcert {

using nlohmann::json;

namespace {

constexpr double kSymmetryTol = 1e-9;
constexpr double kConsistencyTol = 1e-12;

const std::set<std::string>& numeric_fields() {
  static const std::set<std::string> fields{"X", "Y", "S", "Gamma_E", "A", "B", "C", "a", "b", "c"};
  return fields;
}

void require_keys(const json& root, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : root.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw DocumentError("$." + key, "unknown field");
  }
}

const json& field(const json& root, const std::string& key) {
  auto it = root.find(key);
  if (it == root.end()) throw DocumentError("$." + key, "missing required field");
  return *it;
}

int read_count(const json& root, const std::string& key) {
  const json& v = field(root, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw DocumentError("$." + key, "expected a positive integer");
  }
  return static_cast<int>(v.get<long long>());
}

RealMatrix read_matrix(const json& root, const std::string& key, Eigen::Index dim) {
  const std::string path = "$." + key;
  const json& v = field(root, key);
  if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != dim) {
    throw DocumentError(path, "expected " + std::to_string(dim) + " rows");
  }
  RealMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const json& row = v[static_cast<std::size_t>(i)];
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      throw DocumentError(row_path, "expected " + std::to_string(dim) + " entries");
    }
    for (Eigen::Index j = 0; j < dim; ++j) {
      const json& x = row[static_cast<std::size_t>(j)];
      if (!x.is_number()) throw DocumentError(row_path + "[" + std::to_string(j) + "]", "expected a number");
      m(i, j) = x.get<double>();
    }
  }
  return m;
}

std::array<double, 3> read_vector3(const json& root, const std::string& key) {
  const json& v = field(root, key);
  if (!v.is_array() || v.size() != 3) throw DocumentError("$." + key, "expected an array of 3 numbers");
  std::array<double, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!v[i].is_number()) throw DocumentError("$." + key + "[" + std::to_string(i) + "]", "expected a number");
    out[i] = v[i].get<double>();
  }
  return out;
}

Ordering read_ordering(const json& root) {
  auto it = root.find("ordering");
  if (it == root.end()) return Ordering::ModeMajor;
  if (!it->is_string()) throw DocumentError("$.ordering", "expected a string");
  try {
    return parse_ordering(it->get<std::string>());
  } catch (const ContractViolation& e) {
    throw DocumentError("$.ordering", e.what());
  }
}

void require_symmetric(const RealMatrix& m, const std::string& key) {
  const double asym = max_abs(RealMatrix(m - m.transpose()));
  if (asym > kSymmetryTol * (1.0 + max_abs(m))) {
    throw DocumentError("$." + key, "invariant violated: matrix must be symmetric (max asymmetry " +
                                        std::to_string(asym) + ")");
  }
}

GaussianChannel make_channel(const RealMatrix& x, const RealMatrix& y, Ordering ordering,
                             const ParseOptions& opts) {
  require_symmetric(y, "Y");
  try {
    if (!opts.require_valid) return GaussianChannel::unchecked(x, y, ordering);
    return GaussianChannel::make(x, y, ordering, opts.tol);
  } catch (const InvalidChannel& e) {
    throw DocumentError("$", std::string("invariant violated: ") + e.what());
  }
}

void parse_channel(const json& root, ChannelDocument& doc, const ParseOptions& opts) {
  require_keys(root, {"kind", "modes", "ordering", "X", "Y", "meta"});
  const int n = read_count(root, "modes");
  const RealMatrix x = read_matrix(root, "X", 2 * n);
  doc.channel = make_channel(x, read_matrix(root, "Y", 2 * n), doc.ordering, opts);
}

void parse_dilation(const json& root, ChannelDocument& doc, const ParseOptions& opts) {
  require_keys(root, {"kind", "modes", "env_modes", "ordering", "S", "Gamma_E", "X", "Y", "meta"});
  const int n = read_count(root, "modes");
  const int ne = read_count(root, "env_modes");
  const RealMatrix s = read_matrix(root, "S", 2 * (n + ne));
  const RealMatrix gamma = read_matrix(root, "Gamma_E", 2 * ne);
  require_symmetric(gamma, "Gamma_E");
  if (!is_symplectic(s, doc.ordering)) throw DocumentError("$.S", "invariant violated: S must be symplectic");
  const CovarianceMatrix env(gamma, doc.ordering);
  if (!is_valid_covariance(env)) {
    throw DocumentError("$.Gamma_E", "invariant violated: Gamma_E + i sigma >= 0 fails");
  }
  doc.dilation.emplace(s, env, doc.ordering);
  const GaussianChannel induced = from_dilation(*doc.dilation);

  const bool has_x = root.contains("X");
  const bool has_y = root.contains("Y");
  if (has_x != has_y) throw DocumentError(has_x ? "$.Y" : "$.X", "X and Y must be given together");
  if (!has_x) return;
  const RealMatrix x = read_matrix(root, "X", 2 * n);
  doc.channel = make_channel(x, read_matrix(root, "Y", 2 * n), doc.ordering, opts);
  auto mismatch = [](const RealMatrix& a, const RealMatrix& b) {
    return max_abs(RealMatrix(a - b)) > kConsistencyTol * (1.0 + max_abs(a));
  };
  if (mismatch(doc.channel->x(), induced.x())) {
    throw DocumentError("$.X", "invariant violated: disagrees with the channel induced by S and Gamma_E");
  }
  if (mismatch(doc.channel->y(), induced.y())) {
    throw DocumentError("$.Y", "invariant violated: disagrees with the channel induced by S and Gamma_E");
  }
}

void parse_witness(const json& root, ChannelDocument& doc) {
  require_keys(root, {"kind", "a", "b", "c", "A", "B", "C", "meta"});
  const bool has_vectors = root.contains("a") || root.contains("b") || root.contains("c");
  const bool has_dense = root.contains("A") || root.contains("B") || root.contains("C");
  if (!has_vectors && !has_dense) throw DocumentError("$", "witness needs vectors a, b, c or dense A, B, C");
  if (has_vectors) {
    doc.witness_vectors = WitnessVectors{read_vector3(root, "a"), read_vector3(root, "b"), read_vector3(root, "c")};
  }
  try {
    if (has_dense) {
      const json& a = field(root, "A");
      if (!a.is_array() || a.empty()) throw DocumentError("$.A", "expected a square matrix");
      const auto dim = static_cast<Eigen::Index>(a.size());
      const RealMatrix wa = read_matrix(root, "A", dim);
      const RealMatrix wb = read_matrix(root, "B", dim);
      doc.witness.emplace(wa, wb, read_matrix(root, "C", dim));
      doc.witness_dense = true;
    } else {
      const WitnessVectors& v = *doc.witness_vectors;
      doc.witness = Witness::from_vectors(v.a, v.b, v.c);
    }
  } catch (const ContractViolation& e) {
    throw DocumentError("$", std::string("invariant violated: ") + e.what());
  }
}

json canonical_numbers(const json& v) {
  if (v.is_array()) {
    json out = json::array();
    for (const json& x : v) out.push_back(canonical_numbers(x));
    return out;
  }
  if (v.is_number()) return json(v.get<double>());
  return v;
}

}  // namespace

std::string_view to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::Channel: return "channel";
    case DocumentKind::Dilation: return "dilation";
    case DocumentKind::Witness: return "witness";
  }
  return "channel";
}

json matrix_to_json(const RealMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

GaussianChannel ChannelDocument::resolve_channel() const {
  if (kind == DocumentKind::Witness) throw DocumentError("$.kind", "expected a channel or dilation document");
  if (channel) return *channel;
  return from_dilation(*dilation);
}

ChannelDocument parse_document(std::string_view text, const ParseOptions& opts) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError("$", std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw DocumentError("$", "expected a JSON object");

  ChannelDocument doc;
  const json& kind = field(root, "kind");
  if (!kind.is_string()) throw DocumentError("$.kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (auto it = root.find("meta"); it != root.end()) {
    if (!it->is_object()) throw DocumentError("$.meta", "expected an object");
    doc.meta = *it;
  }

  if (k == "channel") {
    doc.kind = DocumentKind::Channel;
    doc.ordering = read_ordering(root);
    parse_channel(root, doc, opts);
  } else if (k == "dilation") {
    doc.kind = DocumentKind::Dilation;
    doc.ordering = read_ordering(root);
    parse_dilation(root, doc, opts);
  } else if (k == "witness") {
    doc.kind = DocumentKind::Witness;
    parse_witness(root, doc);
  } else {
    throw DocumentError("$.kind", "unknown kind '" + k + "' (expected channel, dilation or witness)");
  }
  return doc;
}

std::string emit_document(const ChannelDocument& doc) {
  json root;
  root["kind"] = std::string(to_string(doc.kind));
  auto out = [&](const RealMatrix& m) { return matrix_to_json(reorder(m, Ordering::ModeMajor, doc.ordering)); };

  switch (doc.kind) {
    case DocumentKind::Channel:
      root["modes"] = doc.channel->modes();
      root["ordering"] = std::string(to_string(doc.ordering));
      root["X"] = out(doc.channel->x());
      root["Y"] = out(doc.channel->y());
      break;
    case DocumentKind::Dilation:
      root["modes"] = doc.dilation->modes();
      root["env_modes"] = doc.dilation->env_modes();
      root["ordering"] = std::string(to_string(doc.ordering));
      root["S"] = out(doc.dilation->s());
      root["Gamma_E"] = out(doc.dilation->gamma_env().matrix());
      if (doc.channel) {
        root["X"] = out(doc.channel->x());
        root["Y"] = out(doc.channel->y());
      }
      break;
    case DocumentKind::Witness:
      if (doc.witness_vectors) {
        root["a"] = doc.witness_vectors->a;
        root["b"] = doc.witness_vectors->b;
        root["c"] = doc.witness_vectors->c;
      }
      if (doc.witness_dense || !doc.witness_vectors) {
        root["A"] = matrix_to_json(doc.witness->a());
        root["B"] = matrix_to_json(doc.witness->b());
        root["C"] = matrix_to_json(doc.witness->c());
      }
      break;
  }
  if (!doc.meta.is_null()) root["meta"] = doc.meta;
  return root.dump(2);
}

std::string normalize_document_text(std::string_view text) {
  json root = json::parse(text);
  if (root.is_object()) {
    for (auto& [key, value] : root.items()) {
      if (numeric_fields().count(key)) value = canonical_numbers(value);
    }
    const auto kind = root.value("kind", std::string());
    if ((kind == "channel" || kind == "dilation") && !root.contains("ordering")) root["ordering"] = "mode-major";
  }
  return root.dump(2);
}

}  // namespace gcert
