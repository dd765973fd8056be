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
#include <stdexcept>
#include <string>
#include <vector>

#include "gcert/document.hpp"

namespace gcert {

struct ExampleParams {
  std::optional<double> t;
  std::optional<double> y;
  std::optional<double> nu;
  std::optional<int> modes;
};

struct ExampleEntry {
  std::string name;
  std::string parameters;  // e.g. "t=0.5, y=1-t"
  std::string description;
};

const std::vector<ExampleEntry>& example_registry();

class UnknownExample : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Builds the named example. Unknown names throw UnknownExample listing the
/// registry; out-of-range parameters throw ContractViolation or InvalidChannel.
ChannelDocument make_example(const std::string& name, const ExampleParams& params = {});

/// The squeezed-environment two-mode example as a dilation: beamsplitter
/// network S, environment covariance Gamma_E and the closed-form (X, Y).
RealMatrix paper_dilation_s();
RealMatrix paper_gamma_env();
RealMatrix paper_x();
RealMatrix paper_y();

}  // namespace gcert
