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

#include "gencqa/rewrite.hpp"

#include <cctype>

#include "gencqa/error.hpp"
#include "gencqa/io.hpp"
#include "gencqa/text.hpp"

namespace gencqa {
namespace {

char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || (static_cast<unsigned char>(c) >= 0x80);
}

// Strips whitespace and sentence-final punctuation from the end.
std::string_view strip_tail(std::string_view s) {
  s = trim(s);
  while (!s.empty() && (s.back() == '?' || s.back() == '.' || s.back() == '!')) {
    s.remove_suffix(1);
    s = trim(s);
  }
  return s;
}

// Drops separators left between a pruned head and the question body.
std::string_view strip_lead(std::string_view s) {
  s = trim(s);
  while (!s.empty() && (s.front() == ',' || s.front() == ':' || s.front() == ';')) {
    s.remove_prefix(1);
    s = trim(s);
  }
  return s;
}

bool matches_prefix(std::string_view text, std::string_view prefix) {
  if (prefix.empty() || text.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (ascii_lower(text[i]) != prefix[i]) return false;
  }
  return text.size() == prefix.size() || !is_word_char(text[prefix.size()]);
}

}  // namespace

std::vector<RewriteRule> default_rules() {
  return {
      {"name something", "one thing"}, {"name a", "one"},     {"what", "one thing"},
      {"name an", "one"},              {"name", "one"},       {"tell me something", "one thing"},
      {"which", "one"},                {"tell me a", "one"},  {"tell me", "one"},
      {"give me a", "one"},            {"tell me an", "one"}, {"how can you tell", "one way to tell"},
  };
}

bool is_allowed_head(const std::string& head) {
  return head == "one" || head == "one thing" || head == "one way to tell";
}

std::vector<RewriteRule> load_rules(const std::filesystem::path& path) {
  std::vector<RewriteRule> rules;
  for_each_record(path, [&](const Json& j, std::size_t) {
    RewriteRule rule{j.at("prefix").get<std::string>(), j.at("head").get<std::string>()};
    for (auto& c : rule.prefix) c = ascii_lower(c);
    rule.prefix = std::string(trim(rule.prefix));
    if (rule.prefix.empty()) throw DataError("rewrite rule prefix must be non-empty");
    if (!is_allowed_head(rule.head)) throw DataError("rewrite rule head \"" + rule.head + "\" is not allowed");
    rules.push_back(std::move(rule));
  });
  return rules;
}

RewrittenQuestion rewrite(const Question& question, const std::vector<RewriteRule>& rules) {
  const std::string_view text = trim(question.text);
  const RewriteRule* best = nullptr;
  for (const auto& rule : rules) {
    if (matches_prefix(text, rule.prefix) && (best == nullptr || rule.prefix.size() > best->prefix.size())) {
      best = &rule;
    }
  }

  RewrittenQuestion out;
  if (best == nullptr) {
    out.content = std::string(strip_tail(text));
    out.text = "Q: " + out.content + " A:";
    return out;
  }
  out.matched_prefix = best->prefix;
  out.content = std::string(strip_tail(strip_lead(text.substr(best->prefix.size()))));
  std::string head = best->head;
  if (!text.empty() && std::isupper(static_cast<unsigned char>(text.front()))) {
    head.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(head.front())));
  }
  out.text = head + " " + out.content + " is";
  return out;
}

}  // namespace gencqa
