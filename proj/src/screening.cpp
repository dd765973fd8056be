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

#include "gcert/screening.hpp"

namespace gcert {

namespace {

std::string describe(const char* label, const ChannelClassification& c) {
  std::string s = std::string(label) + ": passive=";
  s += c.passive ? (*c.passive ? "true" : "false") : "unknown";
  s += ", gauge-covariant=" + std::string(c.gauge_covariant ? "true" : "false");
  s += ", PPT=" + std::string(c.ppt ? "true" : "false");
  s += ", EB=" + std::string(to_string(c.eb));
  return s;
}

bool ppt_not_eb(const ChannelClassification& c) { return c.ppt && c.eb == EbStatus::NotEB; }

}  // namespace

std::string_view to_string(PairVerdict v) {
  switch (v) {
    case PairVerdict::SuperActivationImpossible: return "SuperActivationImpossible";
    case PairVerdict::StandardFrameworkCandidate: return "StandardFrameworkCandidate";
    case PairVerdict::OutsideKnownFramework: return "OutsideKnownFramework";
  }
  return "OutsideKnownFramework";
}

ChannelClassification classify(const ChannelDocument& doc, const SdpOptions& opts, double tol) {
  ChannelClassification c;
  const GaussianChannel t = doc.resolve_channel();
  if (doc.dilation) c.passive = is_passive_channel(*doc.dilation);
  c.gauge_covariant = is_gauge_covariant(t);
  c.ppt = is_ppt(t, tol);
  c.eb = is_eb(t, EbMethod::Auto, opts).status;
  return c;
}

ScreeningReport screen_pair(const ChannelClassification& first, const ChannelClassification& second) {
  ScreeningReport r;
  r.first = first;
  r.second = second;
  r.trace.push_back(describe("T1", first));
  r.trace.push_back(describe("T2", second));

  const bool both_passive = first.passive.value_or(false) && second.passive.value_or(false);
  if (!first.passive || !second.passive) r.trace.push_back("passivity unknown for a non-dilation input");

  if (both_passive && (first.ppt || second.ppt)) {
    const char* which = first.ppt ? "T1" : "T2";
    r.verdict = PairVerdict::SuperActivationImpossible;
    r.trace.push_back("both channels passive => both gauge covariant");
    r.trace.push_back(std::string(which) + " gauge covariant and PPT => entanglement breaking");
    r.trace.push_back(std::string(which) + " entanglement breaking => T1 (x) T2 has a symmetric extension");
    r.trace.push_back("symmetric extension => Q(T1 (x) T2) = 0");
    return r;
  }

  if (first.ppt && second.ppt) {
    r.trace.push_back("both PPT => T1 (x) T2 PPT => Q(T1 (x) T2) = 0");
  }

  if ((ppt_not_eb(first) && second.eb == EbStatus::EB) || (ppt_not_eb(second) && first.eb == EbStatus::EB)) {
    r.verdict = PairVerdict::StandardFrameworkCandidate;
    r.trace.push_back("one channel PPT but not entanglement breaking, the other entanglement breaking");
    r.trace.push_back("caveat: positivity of Q(T1 (x) T2) is not decided here");
    return r;
  }

  r.verdict = PairVerdict::OutsideKnownFramework;
  r.trace.push_back("no decision rule applies");
  return r;
}

}  // namespace gcert
