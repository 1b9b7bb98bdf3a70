// Copyright 2026 The qga Authors.
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

#ifndef QGA_DECODE_H_
#define QGA_DECODE_H_

#include <string>
#include <string_view>
#include <vector>

#include "qga/corpus.h"

namespace qga {

inline constexpr std::string_view kDefaultEosToken = "</s>";

// Spans recovered from one generated answer. Roles are left empty; the
// caller attaches them.
struct DecodedArguments {
  std::vector<ArgumentSpan> spans;       // strictly increasing starts
  std::vector<std::string> discarded;    // candidates with no match

  bool operator==(const DecodedArguments &) const = default;
};

// Strips one trailing `eos_token` (ignoring surrounding whitespace), splits
// on ';', trims each piece and drops empty ones.
std::vector<std::string> ParseAnswer(std::string_view raw,
                                     std::string_view eos_token = kDefaultEosToken);

// Matches candidates against the sentence left to right. The search cursor
// starts at 0; a match at position p moves it to p + 1, a miss leaves it in
// place and the candidate is discarded. Matching is exact and
// case-sensitive.
DecodedArguments AlignSpans(const std::vector<std::string> &candidates,
                            std::string_view text);

// ParseAnswer + AlignSpans, with `role` attached to every span.
DecodedArguments DecodeAnswer(std::string_view raw, std::string_view text,
                              std::string_view role,
                              std::string_view eos_token = kDefaultEosToken);

}  // namespace qga

#endif  // QGA_DECODE_H_
