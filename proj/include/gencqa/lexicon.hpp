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
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace gencqa {

class StopWordList {
 public:
  StopWordList() = default;
  explicit StopWordList(std::unordered_set<std::string> words) : words_(std::move(words)) {}

  // The bundled English list (the common NLTK-style 179-word set).
  static StopWordList english();
  // One word per line; blank lines ignored; words lowercased.
  static StopWordList load(const std::filesystem::path& path);

  bool contains(std::string_view token) const { return words_.count(std::string(token)) != 0; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

 private:
  std::unordered_set<std::string> words_;
};

// Synonym classes: the transitive closure of overlapping synsets. A lemma
// absent from every synset is its own singleton class.
class SynonymLexicon {
 public:
  SynonymLexicon() = default;
  explicit SynonymLexicon(const std::vector<std::vector<std::string>>& synsets);

  // One synset per line, lemmas separated by whitespace, '#' starts a comment.
  static SynonymLexicon load(const std::filesystem::path& path);

  // Class identifier: the lexicographically smallest lemma of the class.
  std::string class_of(const std::string& lemma) const;
  bool same_class(const std::string& a, const std::string& b) const { return class_of(a) == class_of(b); }

  std::size_t synset_count() const { return synset_count_; }
  bool empty() const { return class_of_.empty(); }

 private:
  std::unordered_map<std::string, std::string> class_of_;
  std::size_t synset_count_ = 0;
};

}  // namespace gencqa
