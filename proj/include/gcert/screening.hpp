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
#include <vector>

#include "gcert/document.hpp"
#include "gcert/ebcheck.hpp"

namespace gcert {

/// Per-channel facts feeding the pair verdict. `passive` is empty when the
/// input was a bare (X, Y) channel: passivity is a property of a dilation.
struct ChannelClassification {
  std::optional<bool> passive;
  bool gauge_covariant = false;
  bool ppt = false;
  EbStatus eb = EbStatus::Inconclusive;
};

enum class PairVerdict { SuperActivationImpossible, StandardFrameworkCandidate, OutsideKnownFramework };
std::string_view to_string(PairVerdict v);

struct ScreeningReport {
  ChannelClassification first;
  ChannelClassification second;
  PairVerdict verdict = PairVerdict::OutsideKnownFramework;
  std::vector<std::string> trace;
};

ChannelClassification classify(const ChannelDocument& doc, const SdpOptions& opts = {}, double tol = kDefaultPsdTol);

/// Pure decision table:
///   both passive and either PPT            -> SuperActivationImpossible
///   one PPT and not EB, the other EB,
///   not both passive                       -> StandardFrameworkCandidate
///   anything else                          -> OutsideKnownFramework
/// Positive capacity of the pair is never claimed.
ScreeningReport screen_pair(const ChannelClassification& first, const ChannelClassification& second);

}  // namespace gcert
