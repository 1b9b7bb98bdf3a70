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

#include "qga/decode.h"

#include "qga/error.h"
#include "qga/utf8.h"

namespace qga {
namespace {

bool IsValidUtf8(const std::string &s) {
  try {
    Utf8Text t(s);
    return true;
  } catch (const ValidationError &) {
    return false;
  }
}

}  // namespace

std::vector<std::string> ParseAnswer(std::string_view raw,
                                     std::string_view eos_token) {
  std::string_view body = Trim(raw);
  if (!eos_token.empty() && body.ends_with(eos_token)) {
    body.remove_suffix(eos_token.size());
  }
  std::vector<std::string> out;
  while (true) {
    std::size_t pos = body.find(';');
    std::string_view piece = Trim(body.substr(0, pos));
    if (!piece.empty()) out.emplace_back(piece);
    if (pos == std::string_view::npos) break;
    body.remove_prefix(pos + 1);
  }
  return out;
}

DecodedArguments AlignSpans(const std::vector<std::string> &candidates,
                            std::string_view text) {
  Utf8Text sentence{std::string(text)};
  DecodedArguments out;
  std::size_t cursor = 0;
  for (const std::string &candidate : candidates) {
    std::size_t start = Utf8Text::npos;
    if (!candidate.empty() && IsValidUtf8(candidate)) {
      start = sentence.Find(candidate, cursor);
    }
    if (start == Utf8Text::npos) {
      out.discarded.push_back(candidate);
      continue;
    }
    ArgumentSpan span;
    span.start = start;
    span.end = start + CharLength(candidate);
    span.surface = candidate;
    out.spans.push_back(std::move(span));
    cursor = start + 1;
  }
  return out;
}

DecodedArguments DecodeAnswer(std::string_view raw, std::string_view text,
                              std::string_view role,
                              std::string_view eos_token) {
  DecodedArguments decoded = AlignSpans(ParseAnswer(raw, eos_token), text);
  for (ArgumentSpan &span : decoded.spans) span.role = std::string(role);
  return decoded;
}

}  // namespace qga
