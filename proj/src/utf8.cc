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

#include "qga/utf8.h"

#include <algorithm>

#include "qga/error.h"

namespace qga {
namespace {

// Length of the sequence introduced by `lead`, or 0 if it is not a lead byte.
int SequenceLength(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return lead >= 0xC2 ? 2 : 0;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return lead <= 0xF4 ? 4 : 0;
  return 0;
}

// Rules out overlong forms, UTF-16 surrogates and values above U+10FFFF.
bool SecondByteOk(unsigned char lead, unsigned char next) {
  switch (lead) {
    case 0xE0: return next >= 0xA0;
    case 0xED: return next < 0xA0;
    case 0xF0: return next >= 0x90;
    case 0xF4: return next < 0x90;
    default: return true;
  }
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

}  // namespace

Utf8Text::Utf8Text(std::string text) : text_(std::move(text)) {
  starts_.reserve(text_.size() + 1);
  std::size_t i = 0;
  while (i < text_.size()) {
    int len = SequenceLength(static_cast<unsigned char>(text_[i]));
    if (len == 0 || i + len > text_.size()) {
      throw ValidationError("malformed UTF-8 at byte " + std::to_string(i));
    }
    for (int k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(text_[i + k]) & 0xC0) != 0x80) {
        throw ValidationError("malformed UTF-8 at byte " + std::to_string(i));
      }
    }
    if (len > 2 && !SecondByteOk(static_cast<unsigned char>(text_[i]),
                                 static_cast<unsigned char>(text_[i + 1]))) {
      throw ValidationError("overlong or surrogate UTF-8 at byte " +
                            std::to_string(i));
    }
    starts_.push_back(i);
    i += len;
  }
  starts_.push_back(text_.size());
}

std::size_t Utf8Text::CharIndex(std::size_t byte_offset) const {
  auto it = std::lower_bound(starts_.begin(), starts_.end(), byte_offset);
  if (it == starts_.end() || *it != byte_offset) {
    throw ValidationError("byte offset " + std::to_string(byte_offset) +
                          " is not on a character boundary");
  }
  return static_cast<std::size_t>(it - starts_.begin());
}

std::string_view Utf8Text::Slice(std::size_t start, std::size_t end) const {
  std::size_t b = ByteOffset(start);
  std::size_t e = ByteOffset(end);
  return std::string_view(text_).substr(b, e - b);
}

std::size_t Utf8Text::Find(std::string_view needle, std::size_t from) const {
  if (needle.empty() || from > size()) return npos;
  // A valid UTF-8 needle can only match on a character boundary; a needle
  // holding stray continuation bytes may not, so keep looking.
  std::size_t pos = text_.find(needle, ByteOffset(from));
  while (pos != std::string::npos) {
    auto it = std::lower_bound(starts_.begin(), starts_.end(), pos);
    if (*it == pos) return static_cast<std::size_t>(it - starts_.begin());
    pos = text_.find(needle, pos + 1);
  }
  return npos;
}

std::size_t CharLength(std::string_view text) {
  std::size_t n = 0;
  for (char c : text) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string_view Trim(std::string_view text) {
  while (!text.empty() && IsSpace(text.front())) text.remove_prefix(1);
  while (!text.empty() && IsSpace(text.back())) text.remove_suffix(1);
  return text;
}

}  // namespace qga
