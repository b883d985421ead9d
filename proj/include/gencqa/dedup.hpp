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

#include <set>
#include <string>
#include <vector>

#include "gencqa/generate.hpp"
#include "gencqa/lexicon.hpp"

namespace gencqa {

// Set of synonym-class ids of an answer's content lemmas.
struct NormalForm {
  std::set<std::string> class_ids;

  bool empty() const { return class_ids.empty(); }
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

// Stop-word-filtered lemmas, before synonym mapping.
std::vector<std::string> content_lemmas(const std::string& text, const StopWordList& stop);

NormalForm normal_form(const std::string& answer, const StopWordList& stop, const SynonymLexicon& lex);

// Keeps the most confident candidate of each NormalForm group, in input
// order; drops candidates with an empty NormalForm. Input must already be
// sorted by confidence descending.
std::vector<Candidate> dedup(const std::vector<Candidate>& candidates, const StopWordList& stop,
                             const SynonymLexicon& lex);

inline constexpr int kDefaultRetain = 12;

std::vector<Candidate> retain_top(const std::vector<Candidate>& candidates, int limit = kDefaultRetain);

}  // namespace gencqa
