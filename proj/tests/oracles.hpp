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

// Independent reference computations used by the unit and acceptance
// suites. Nothing here calls into the library's scoring paths.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Splits pre-normalized text (lowercase words separated by single spaces).
inline std::vector<std::string> words(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// TF-IDF keyword selection by repeated argmax over a brute-force df count.
inline std::vector<std::pair<std::string, double>> tfidf_top_m(const std::vector<std::string>& corpus,
                                                               const std::string& question,
                                                               const std::set<std::string>& stop, int m) {
  const double n = static_cast<double>(corpus.size());
  const auto idf_of = [&](const std::string& t) {
    int df = 0;
    for (const auto& q : corpus) {
      const auto ws = words(q);
      if (std::find(ws.begin(), ws.end(), t) != ws.end()) ++df;
    }
    return std::log((n + 1.0) / (df + 1.0)) + 1.0;
  };
  const auto ws = words(question);
  std::vector<std::string> distinct;
  for (const auto& w : ws) {
    if (stop.count(w) == 0 && std::find(distinct.begin(), distinct.end(), w) == distinct.end()) distinct.push_back(w);
  }
  std::vector<double> scores;
  for (const auto& t : distinct) {
    const double tf = static_cast<double>(std::count(ws.begin(), ws.end(), t));
    scores.push_back(tf * idf_of(t));
  }
  std::vector<std::pair<std::string, double>> out;
  std::vector<bool> used(distinct.size(), false);
  for (int round = 0; round < m; ++round) {
    int best = -1;
    for (std::size_t i = 0; i < distinct.size(); ++i) {
      if (used[i]) continue;
      if (best < 0 || scores[i] > scores[static_cast<std::size_t>(best)]) best = static_cast<int>(i);
    }
    if (best < 0) break;
    used[static_cast<std::size_t>(best)] = true;
    out.emplace_back(distinct[static_cast<std::size_t>(best)], scores[static_cast<std::size_t>(best)]);
  }
  return out;
}

struct OracleCluster {
  int weight;
  std::vector<std::string> answers;
};

// Weighted accuracy by explicit double sum over an r[i][j] reward matrix.
// Membership is plain string equality; clusters are taken in the given order
// (callers pass them weight-sorted) and each cluster pays out once.
inline double weighted_accuracy(const std::vector<std::string>& truncated, const std::vector<OracleCluster>& clusters) {
  const std::size_t len = truncated.size();
  const std::size_t nc = clusters.size();
  std::vector<std::vector<double>> r(len, std::vector<double>(nc, 0.0));
  std::vector<bool> paid(nc, false);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      const auto& a = clusters[j].answers;
      if (std::find(a.begin(), a.end(), truncated[i]) != a.end()) {
        if (!paid[j]) {
          r[i][j] = clusters[j].weight;
          paid[j] = true;
        }
        break;  // first matching cluster only
      }
    }
  }
  std::vector<int> ideal;
  for (const auto& c : clusters) ideal.push_back(c.weight);
  std::sort(ideal.rbegin(), ideal.rend());
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < nc; ++j) num += r[i][j];
    den += i < ideal.size() ? ideal[i] : 0.0;
  }
  return (len == 0 || den == 0.0) ? 0.0 : num / den;
}

// Lemma-count dot product: each matching pair of lemmas whose hash buckets
// coincide contributes count_q * count_d.
template <typename BucketFn>
double bag_dot(const std::vector<std::string>& query_lemmas, const std::vector<std::string>& def_lemmas, BucketFn bucket) {
  std::map<std::string, int> qc;
  std::map<std::string, int> dc;
  for (const auto& l : query_lemmas) ++qc[l];
  for (const auto& l : def_lemmas) ++dc[l];
  double s = 0.0;
  for (const auto& [a, ca] : qc) {
    for (const auto& [b, cb] : dc) {
      if (bucket(a) == bucket(b)) s += static_cast<double>(ca) * cb;
    }
  }
  return s;
}

// Mean BCE of a logistic model written out longhand.
inline double logistic_loss(const std::vector<double>& w, double b, const std::vector<std::vector<double>>& x,
                            const std::vector<int>& y) {
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double z = b;
    for (std::size_t k = 0; k < w.size(); ++k) z += w[k] * x[i][k];
    double p = 1.0 / (1.0 + std::exp(-z));
    p = std::min(std::max(p, 1e-7), 1.0 - 1e-7);
    total += -(y[i] * std::log(p) + (1 - y[i]) * std::log(1.0 - p));
  }
  return total / static_cast<double>(x.size());
}

}  // namespace oracle
