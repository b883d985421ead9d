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

#include "gencqa/keywords.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

#include "gencqa/error.hpp"
#include "gencqa/io.hpp"
#include "gencqa/text.hpp"

namespace gencqa {

double smoothed_idf(int num_questions, int document_frequency) {
  return std::log(static_cast<double>(num_questions + 1) / static_cast<double>(document_frequency + 1)) + 1.0;
}

IdfTable::IdfTable(std::unordered_map<std::string, double> idf, int num_questions)
    : idf_(std::move(idf)), num_questions_(num_questions) {
  if (num_questions_ < 1) throw DataError("IdfTable requires num_questions >= 1");
  for (const auto& [token, value] : idf_) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
      throw DataError("idf for \"" + token + "\" must be finite and non-negative");
    }
  }
}

double IdfTable::idf(const std::string& token) const {
  auto it = idf_.find(token);
  return it == idf_.end() ? unknown_idf() : it->second;
}

std::optional<double> IdfTable::stored(const std::string& token) const {
  auto it = idf_.find(token);
  if (it == idf_.end()) return std::nullopt;
  return it->second;
}

double IdfTable::unknown_idf() const { return smoothed_idf(num_questions_, 0); }

void IdfTable::save(const std::filesystem::path& path) const {
  std::vector<Json> records;
  records.reserve(idf_.size() + 1);
  records.push_back({{"num_questions", num_questions_}});
  std::map<std::string, double> sorted(idf_.begin(), idf_.end());
  for (const auto& [token, value] : sorted) records.push_back({{"token", token}, {"idf", value}});
  write_records(path, records);
}

IdfTable IdfTable::load(const std::filesystem::path& path) {
  std::optional<int> n;
  std::unordered_map<std::string, double> idf;
  for_each_record(path, [&](const Json& j, std::size_t) {
    if (j.contains("num_questions")) {
      if (n) throw DataError("duplicate num_questions header");
      n = j.at("num_questions").get<int>();
      return;
    }
    idf[j.at("token").get<std::string>()] = j.at("idf").get<double>();
  });
  if (!n) throw DataError(path.string() + ": missing num_questions header");
  return IdfTable(std::move(idf), *n);
}

std::vector<std::string> KeywordList::tokens() const {
  std::vector<std::string> out;
  out.reserve(keywords.size());
  for (const auto& k : keywords) out.push_back(k.token);
  return out;
}

IdfTable build_idf(const std::vector<Question>& questions, const StopWordList& stop_words) {
  if (questions.empty()) throw DataError("build_idf: empty question list");
  std::unordered_map<std::string, int> df;
  for (const auto& q : questions) {
    std::unordered_set<std::string> seen;
    for (const auto& tok : normalize_text(q.text).tokens) {
      if (stop_words.contains(tok)) continue;
      if (seen.insert(tok).second) ++df[tok];
    }
  }
  const int n = static_cast<int>(questions.size());
  std::unordered_map<std::string, double> idf;
  idf.reserve(df.size());
  for (const auto& [token, count] : df) idf[token] = smoothed_idf(n, count);
  return IdfTable(std::move(idf), n);
}

KeywordList extract_keywords(const Question& question, const IdfTable& idf, int m,
                             const StopWordList& stop_words) {
  if (m < 1) throw DataError("extract_keywords: m must be >= 1");
  struct Term {
    std::string token;
    std::size_t first = 0;
    int tf = 0;
    double score = 0.0;
  };
  std::vector<Term> terms;
  std::unordered_map<std::string, std::size_t> slot;
  const auto tokens = normalize_text(question.text).tokens;
  for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
    const auto& tok = tokens[pos];
    if (stop_words.contains(tok)) continue;
    auto [it, inserted] = slot.emplace(tok, terms.size());
    if (inserted) terms.push_back({tok, pos, 0, 0.0});
    ++terms[it->second].tf;
  }
  for (auto& t : terms) t.score = t.tf * idf.idf(t.token);
  // terms are already in first-occurrence order, so a stable sort keeps the tie-break.
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.score > b.score; });

  KeywordList out;
  const std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(m), terms.size());
  for (std::size_t i = 0; i < take; ++i) out.keywords.push_back({terms[i].token, terms[i].score});
  return out;
}

}  // namespace gencqa
