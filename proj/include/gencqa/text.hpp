// Copyright 2026 The gencqa Authors
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

#include <string>
#include <string_view>
#include <vector>

namespace gencqa {

// Ordered lowercase tokens. Every token is non-empty and whitespace-free.
struct TokenSequence {
  std::vector<std::string> tokens;

  bool empty() const { return tokens.empty(); }
  std::size_t size() const { return tokens.size(); }
  std::string joined() const;  // single-space join

  friend bool operator==(const TokenSequence&, const TokenSequence&) = default;
};

// Lowercases (simple case folding), maps every non-alphanumeric code point
// to a space, and splits on whitespace. Invalid UTF-8 bytes are treated as
// separators.
TokenSequence normalize_text(std::string_view text);

// Canonical string key for an answer: normalize_text(...).joined().
std::string normalized_key(std::string_view text);

std::string_view trim(std::string_view s);

// Number of code points in a UTF-8 string (invalid bytes count as one each).
std::size_t utf8_length(std::string_view s);

}  // namespace gencqa
