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

#include "gencqa/lexicon.hpp"

#include <sstream>

#include "gencqa/error.hpp"
#include "gencqa/io.hpp"
#include "gencqa/text.hpp"

namespace gencqa {

StopWordList StopWordList::english() {
  static const char* const kWords[] = {
      "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you", "you're", "you've",
      "you'll", "you'd", "your", "yours", "yourself", "yourselves", "he", "him", "his", "himself",
      "she", "she's", "her", "hers", "herself", "it", "it's", "its", "itself", "they", "them",
      "their", "theirs", "themselves", "what", "which", "who", "whom", "this", "that", "that'll",
      "these", "those", "am", "is", "are", "was", "were", "be", "been", "being", "have", "has",
      "had", "having", "do", "does", "did", "doing", "a", "an", "the", "and", "but", "if", "or",
      "because", "as", "until", "while", "of", "at", "by", "for", "with", "about", "against",
      "between", "into", "through", "during", "before", "after", "above", "below", "to", "from",
      "up", "down", "in", "out", "on", "off", "over", "under", "again", "further", "then", "once",
      "here", "there", "when", "where", "why", "how", "all", "any", "both", "each", "few", "more",
      "most", "other", "some", "such", "no", "nor", "not", "only", "own", "same", "so", "than",
      "too", "very", "s", "t", "can", "will", "just", "don", "don't", "should", "should've", "now",
      "d", "ll", "m", "o", "re", "ve", "y", "ain", "aren", "aren't", "couldn", "couldn't", "didn",
      "didn't", "doesn", "doesn't", "hadn", "hadn't", "hasn", "hasn't", "haven", "haven't", "isn",
      "isn't", "ma", "mightn", "mightn't", "mustn", "mustn't", "needn", "needn't", "shan", "shan't",
      "shouldn", "shouldn't", "wasn", "wasn't", "weren", "weren't", "won", "won't", "wouldn",
      "wouldn't"};
  std::unordered_set<std::string> words;
  for (const char* w : kWords) words.insert(w);
  return StopWordList(std::move(words));
}

StopWordList StopWordList::load(const std::filesystem::path& path) {
  std::unordered_set<std::string> words;
  for (const auto& line : read_lines(path)) {
    for (const auto& tok : normalize_text(line).tokens) words.insert(tok);
  }
  return StopWordList(std::move(words));
}

namespace {

struct DisjointSet {
  std::unordered_map<std::string, std::string> parent;

  const std::string& find(const std::string& x) {
    auto it = parent.find(x);
    if (it == parent.end()) it = parent.emplace(x, x).first;
    if (it->second == x) return it->second;
    const std::string root = find(it->second);
    auto& slot = parent[x];
    slot = root;
    return slot;
  }

  void unite(const std::string& a, const std::string& b) {
    const std::string ra = find(a);
    const std::string rb = find(b);
    if (ra == rb) return;
    // Smaller lemma becomes the root so the class id is order-independent.
    if (ra < rb) {
      parent[rb] = ra;
    } else {
      parent[ra] = rb;
    }
  }
};

}  // namespace

SynonymLexicon::SynonymLexicon(const std::vector<std::vector<std::string>>& synsets) {
  DisjointSet sets;
  for (const auto& synset : synsets) {
    if (synset.empty()) continue;
    ++synset_count_;
    sets.find(synset.front());
    for (std::size_t i = 1; i < synset.size(); ++i) sets.unite(synset.front(), synset[i]);
  }
  for (const auto& [lemma, _] : sets.parent) class_of_[lemma] = sets.find(lemma);
}

SynonymLexicon SynonymLexicon::load(const std::filesystem::path& path) {
  std::vector<std::vector<std::string>> synsets;
  for (auto line : read_lines(path)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    std::vector<std::string> synset;
    std::string lemma;
    while (in >> lemma) {
      for (auto& c : lemma) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      }
      synset.push_back(lemma);
    }
    if (!synset.empty()) synsets.push_back(std::move(synset));
  }
  return SynonymLexicon(synsets);
}

std::string SynonymLexicon::class_of(const std::string& lemma) const {
  auto it = class_of_.find(lemma);
  return it == class_of_.end() ? lemma : it->second;
}

}  // namespace gencqa
