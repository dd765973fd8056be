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
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "gcert/channel.hpp"
#include "gcert/witness.hpp"

/// JSON documents describing channels, dilations and witnesses.
///
///   {"kind": "channel", "modes": n, "ordering": "mode-major", "X": [[...]], "Y": [[...]], "meta": {...}}
///   {"kind": "dilation", "modes": n, "env_modes": nE, "ordering": "mode-major",
///    "S": [[...]], "Gamma_E": [[...]], "X": [[...]], "Y": [[...]], "meta": {...}}
///   {"kind": "witness", "a": [...], "b": [...], "c": [...], "A": [[...]], "B": [[...]], "C": [[...]]}
///
/// Matrices are nested row-major arrays in the document's ordering. In a
/// dilation, "X"/"Y" are optional and, when present, must agree with the
/// channel induced by (S, Gamma_E). In a witness, dense "A"/"B"/"C" override
/// the pattern vectors.
namespace gcert {

enum class DocumentKind { Channel, Dilation, Witness };
std::string_view to_string(DocumentKind k);

/// Schema or invariant violation. `path` points at the offending field
/// (e.g. "$.Y[2][1]").
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct WitnessVectors {
  std::array<double, 3> a{};
  std::array<double, 3> b{};
  std::array<double, 3> c{};
};

struct ChannelDocument {
  DocumentKind kind = DocumentKind::Channel;
  Ordering ordering = Ordering::ModeMajor;
  nlohmann::json meta;  // null when absent

  std::optional<GaussianChannel> channel;        // Channel; Dilation when X/Y were stored
  std::optional<DilationSpec> dilation;          // Dilation
  std::optional<Witness> witness;                // Witness
  std::optional<WitnessVectors> witness_vectors; // Witness given as a, b, c
  bool witness_dense = false;                    // Witness given as A, B, C

  /// The channel a Channel or Dilation document describes.
  GaussianChannel resolve_channel() const;
};

struct ParseOptions {
  double tol = kDefaultPsdTol;  // complete-positivity tolerance for (X, Y)
  bool require_valid = true;    // false keeps non-CP (X, Y) for diagnosis
};

ChannelDocument parse_document(std::string_view text, const ParseOptions& opts = {});
std::string emit_document(const ChannelDocument& doc);
/// Canonical text of a document: matrix/vector entries as doubles, the
/// default ordering filled in, two-space indentation.
std::string normalize_document_text(std::string_view text);

/// Row-major nested arrays.
nlohmann::json matrix_to_json(const RealMatrix& m);

}  // namespace gcert
