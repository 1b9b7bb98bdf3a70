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

#ifndef QGA_UTF8_H_
#define QGA_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qga {

// A UTF-8 string indexed by Unicode scalar value. All corpus offsets are
// scalar-value offsets; this class converts them to and from byte offsets.
class Utf8Text {
 public:
  // Throws ValidationError on malformed UTF-8.
  explicit Utf8Text(std::string text);

  const std::string &str() const { return text_; }

  // Number of scalar values.
  std::size_t size() const { return starts_.size() - 1; }

  // Byte offset of scalar value `index`; size() maps to the byte length.
  std::size_t ByteOffset(std::size_t index) const { return starts_.at(index); }

  // Scalar index of a byte offset that lies on a character boundary.
  std::size_t CharIndex(std::size_t byte_offset) const;

  // Substring between scalar offsets [start, end).
  std::string_view Slice(std::size_t start, std::size_t end) const;

  // First occurrence of `needle` at scalar offset >= from, as a scalar
  // offset. Returns npos when absent or when `needle` is empty.
  std::size_t Find(std::string_view needle, std::size_t from) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::string text_;
  std::vector<std::size_t> starts_;
};

// Number of scalar values in a UTF-8 string.
std::size_t CharLength(std::string_view text);

// Lowercases ASCII letters, leaves everything else untouched.
std::string AsciiLower(std::string_view text);

// Strips leading and trailing ASCII whitespace.
std::string_view Trim(std::string_view text);

}  // namespace qga

#endif  // QGA_UTF8_H_
