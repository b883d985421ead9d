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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gencqa/data.hpp"

namespace gencqa {

struct RewriteRule {
  std::string prefix;  // lowercase question head, e.g. "name something"
  std::string head;    // "one", "one thing" or "one way to tell"

  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

struct RewrittenQuestion {
  std::string text;
  std::optional<std::string> matched_prefix;
  std::string content;
};

// The 12 question heads and their Cloze heads.
std::vector<RewriteRule> default_rules();

// Line records {"prefix", "head"}; validates heads and prefixes.
std::vector<RewriteRule> load_rules(const std::filesystem::path& path);

bool is_allowed_head(const std::string& head);

// Longest matching prefix (case-insensitive, ending at a token boundary)
// yields "<head> <content> is"; otherwise "Q: <content> A:".
RewrittenQuestion rewrite(const Question& question, const std::vector<RewriteRule>& rules);

}  // namespace gencqa
