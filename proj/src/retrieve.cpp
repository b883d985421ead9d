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

#include "gencqa/retrieve.hpp"

#include <cstdint>

#include "gencqa/error.hpp"
#include "gencqa/io.hpp"
#include "gencqa/lemmatizer.hpp"
#include "gencqa/text.hpp"

namespace gencqa {

void DictionaryIndex::add(const std::string& lemma, const std::vector<std::string>& definitions) {
  auto& slot = entries_[lemma];
  slot.insert(slot.end(), definitions.begin(), definitions.end());
}

const std::vector<std::string>* DictionaryIndex::lookup(const std::string& lemma) const {
  auto it = entries_.find(lemma);
  return it == entries_.end() ? nullptr : &it->second;
}

DictionaryIndex build_index(const std::filesystem::path& dump_path) {
  DictionaryIndex index;
  for_each_record(dump_path, [&](const Json& j, std::size_t) {
    if (!j.is_object() || !j.contains("lemma") || !j.at("lemma").is_string()) {
      throw DataError("dump record needs a string \"lemma\"");
    }
    std::string lemma = normalized_key(j.at("lemma").get<std::string>());
    if (lemma.empty()) throw DataError("dump lemma must be non-empty");
    const Json& defs = j.at("definitions");
    if (!defs.is_array() || defs.empty()) throw DataError("dump record needs a non-empty \"definitions\" array");
    std::vector<std::string> definitions;
    for (const auto& d : defs) {
      if (!d.is_string()) throw DataError("definitions must be strings");
      definitions.push_back(d.get<std::string>());
    }
    index.add(lemma, definitions);
  });
  return index;
}

std::vector<std::vector<double>> Embedder::embed_batch(const std::vector<std::string>& texts) const {
  std::vector<std::vector<double>> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(embed(t));
  return out;
}

HashedBagOfLemmasEmbedder::HashedBagOfLemmasEmbedder(StopWordList stop_words, std::size_t dim)
    : stop_words_(std::move(stop_words)), dim_(dim) {
  if (dim_ == 0) throw ConfigError("embedder dimension must be positive");
}

std::size_t HashedBagOfLemmasEmbedder::bucket_of(const std::string& lemma) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : lemma) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h % dim_);
}

std::vector<std::string> HashedBagOfLemmasEmbedder::content_lemmas(const std::string& text) const {
  std::vector<std::string> out;
  for (const auto& tok : normalize_text(text).tokens) {
    if (stop_words_.contains(tok)) continue;
    out.push_back(lemmatize(tok));
  }
  return out;
}

std::vector<double> HashedBagOfLemmasEmbedder::embed(const std::string& text) const {
  std::vector<double> v(dim_, 0.0);
  for (const auto& lemma : content_lemmas(text)) v[bucket_of(lemma)] += 1.0;
  return v;
}

RemoteEmbedder::RemoteEmbedder(std::unique_ptr<LineChannel> channel, std::size_t dim)
    : channel_(std::move(channel)), dim_(dim) {
  if (dim_ == 0) throw ConfigError("remote embedder needs a positive dimension");
}

std::vector<double> RemoteEmbedder::embed(const std::string& text) const { return embed_batch({text}).front(); }

std::vector<std::vector<double>> RemoteEmbedder::embed_batch(const std::vector<std::string>& texts) const {
  const Json reply = channel_->exchange_json({{"texts", texts}});
  if (!reply.is_object() || !reply.contains("vectors") || !reply.at("vectors").is_array()) {
    throw BackendError(name() + ": response lacks \"vectors\"");
  }
  const Json& vectors = reply.at("vectors");
  if (vectors.size() != texts.size()) throw BackendError(name() + ": vector count does not match text count");
  std::vector<std::vector<double>> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (!v.is_array()) throw BackendError(name() + ": vector must be an array");
    std::vector<double> row;
    row.reserve(v.size());
    for (const auto& x : v) {
      if (!x.is_number()) throw BackendError(name() + ": vector entries must be numbers");
      row.push_back(x.get<double>());
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::string make_query(const std::string& keyword, const Question& question) {
  return "What is the meaning of word " + keyword + " in the sentence " + question.text + "?";
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

DefinitionChoice select_definition(const std::string& query, const std::vector<std::string>& definitions,
                                   const Embedder& embedder) {
  if (definitions.empty()) throw DataError("select_definition: no definitions");
  std::vector<std::string> texts;
  texts.reserve(definitions.size() + 1);
  texts.push_back(query);
  texts.insert(texts.end(), definitions.begin(), definitions.end());
  const auto vectors = embedder.embed_batch(texts);
  if (vectors.size() != texts.size()) throw BackendError(embedder.name() + ": wrong number of embeddings");
  for (const auto& v : vectors) {
    if (v.size() != embedder.dim()) {
      throw BackendError(embedder.name() + ": embedding of length " + std::to_string(v.size()) +
                         ", expected " + std::to_string(embedder.dim()));
    }
  }
  DefinitionChoice best{0, dot(vectors[0], vectors[1])};
  for (std::size_t i = 1; i < definitions.size(); ++i) {
    const double s = dot(vectors[0], vectors[i + 1]);
    if (s > best.score) best = {i, s};
  }
  return best;
}

std::string render_knowledge(const std::vector<KnowledgeItem>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out.push_back(' ');
    out += item.keyword + ": " + item.definition;
  }
  return out;
}

KnowledgeSet retrieve_knowledge(const Question& question, const KeywordList& keywords,
                                const DictionaryIndex& index, const Embedder& embedder) {
  KnowledgeSet set;
  for (const auto& kw : keywords.keywords) {
    const auto* definitions = index.lookup(lemmatize(kw.token));
    if (definitions == nullptr) continue;
    const auto choice = select_definition(make_query(kw.token, question), *definitions, embedder);
    set.items.push_back({kw.token, (*definitions)[choice.index], choice.score});
  }
  set.rendered = render_knowledge(set.items);
  return set;
}

}  // namespace gencqa
