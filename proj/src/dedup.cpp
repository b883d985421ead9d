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

#include "gencqa/dedup.hpp"

#include <algorithm>

#include "gencqa/error.hpp"
#include "gencqa/lemmatizer.hpp"
#include "gencqa/text.hpp"

namespace gencqa {

std::vector<std::string> content_lemmas(const std::string& text, const StopWordList& stop) {
  std::vector<std::string> out;
  for (const auto& tok : normalize_text(text).tokens) {
    if (!stop.contains(tok)) out.push_back(lemmatize(tok));
  }
  return out;
}

NormalForm normal_form(const std::string& answer, const StopWordList& stop, const SynonymLexicon& lex) {
  NormalForm nf;
  for (const auto& lemma : content_lemmas(answer, stop)) nf.class_ids.insert(lex.class_of(lemma));
  return nf;
}

std::vector<Candidate> dedup(const std::vector<Candidate>& candidates, const StopWordList& stop,
                             const SynonymLexicon& lex) {
  std::set<NormalForm> seen;
  std::vector<Candidate> out;
  for (const auto& c : candidates) {
    NormalForm nf = normal_form(c.text, stop, lex);
    if (nf.empty()) continue;
    if (seen.insert(std::move(nf)).second) out.push_back(c);
  }
  return out;
}

std::vector<Candidate> retain_top(const std::vector<Candidate>& candidates, int limit) {
  if (limit < 1) throw ConfigError("retain limit must be >= 1");
  const auto n = std::min<std::size_t>(candidates.size(), static_cast<std::size_t>(limit));
  return {candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(n)};
}

}  // namespace gencqa
