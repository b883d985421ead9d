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
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "gencqa/channel.hpp"
#include "gencqa/data.hpp"
#include "gencqa/keywords.hpp"
#include "gencqa/lexicon.hpp"

namespace gencqa {

// Exact-match lemma -> definitions, in dump order.
class DictionaryIndex {
 public:
  void add(const std::string& lemma, const std::vector<std::string>& definitions);

  // Returns nullptr when the lemma has no entry.
  const std::vector<std::string>* lookup(const std::string& lemma) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::vector<std::string>> entries_;
};

// Dump records {"lemma", "definitions": [...]}; repeated lemmas append.
DictionaryIndex build_index(const std::filesystem::path& dump_path);

// Sentence embedder. Implementations must be deterministic and safe to call
// from several threads.
class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual std::size_t dim() const = 0;
  virtual std::string name() const = 0;
  virtual std::vector<double> embed(const std::string& text) const = 0;
  virtual std::vector<std::vector<double>> embed_batch(const std::vector<std::string>& texts) const;
};

// Count-valued bag of content lemmas hashed into `dim` buckets (FNV-1a).
class HashedBagOfLemmasEmbedder final : public Embedder {
 public:
  static constexpr std::size_t kDefaultDim = 256;

  explicit HashedBagOfLemmasEmbedder(StopWordList stop_words = StopWordList::english(),
                                     std::size_t dim = kDefaultDim);

  std::size_t dim() const override { return dim_; }
  std::string name() const override { return "hashed-bag-of-lemmas"; }
  std::vector<double> embed(const std::string& text) const override;

  std::size_t bucket_of(const std::string& lemma) const;
  // Stop-word-filtered lemmas of `text`, in order, with repeats.
  std::vector<std::string> content_lemmas(const std::string& text) const;

 private:
  StopWordList stop_words_;
  std::size_t dim_;
};

// Speaks {"texts": [...]} -> {"vectors": [[...], ...]} over a LineChannel.
class RemoteEmbedder final : public Embedder {
 public:
  RemoteEmbedder(std::unique_ptr<LineChannel> channel, std::size_t dim);

  std::size_t dim() const override { return dim_; }
  std::string name() const override { return channel_->describe(); }
  std::vector<double> embed(const std::string& text) const override;
  std::vector<std::vector<double>> embed_batch(const std::vector<std::string>& texts) const override;

 private:
  std::unique_ptr<LineChannel> channel_;
  std::size_t dim_;
};

std::string make_query(const std::string& keyword, const Question& question);

struct DefinitionChoice {
  std::size_t index = 0;
  double score = 0.0;
};

double dot(const std::vector<double>& a, const std::vector<double>& b);

// Argmax of dot(embed(query), embed(definition)); lowest index wins ties.
DefinitionChoice select_definition(const std::string& query, const std::vector<std::string>& definitions,
                                   const Embedder& embedder);

struct KnowledgeItem {
  std::string keyword;
  std::string definition;
  double score = 0.0;
};

struct KnowledgeSet {
  std::vector<KnowledgeItem> items;
  std::string rendered;  // "kw: definition kw: definition"
};

std::string render_knowledge(const std::vector<KnowledgeItem>& items);

KnowledgeSet retrieve_knowledge(const Question& question, const KeywordList& keywords,
                                const DictionaryIndex& index, const Embedder& embedder);

}  // namespace gencqa
