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

#include <ostream>
#include <string>
#include <vector>

namespace gcert {

inline constexpr int kExitVerdict = 0;
inline constexpr int kExitInconclusive = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command line (without the program name). Exit codes: 0 when a
/// verdict was computed, 1 for Inconclusive results or a refused witness,
/// 2 for input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcert
