// Copyright 2026 The crtool Authors.
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

// Shared generators and brute-force oracles for the test suites. The oracles
// deliberately avoid the library code paths they are used to check.

#ifndef CRTOOL_TESTS_TEST_SUPPORT_H_
#define CRTOOL_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "crtool/conll_convert.h"
#include "crtool/eval.h"
#include "crtool/model.h"
#include "crtool/ontology.h"
#include "crtool/standoff_io.h"
#include "crtool/unicode.h"

namespace crtool::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

// Character set covered by a span list.
inline std::set<std::size_t> char_set(const std::vector<TextSpan>& spans) {
  std::set<std::size_t> out;
  for (const auto& s : spans) {
    for (std::size_t c = s.start; c < s.end; ++c) out.insert(c);
  }
  return out;
}

inline double jaccard_oracle(const std::vector<TextSpan>& a,
                             const std::vector<TextSpan>& b) {
  const auto sa = char_set(a), sb = char_set(b);
  std::size_t inter = 0;
  for (auto c : sa) inter += sb.count(c);
  const std::size_t uni = sa.size() + sb.size() - inter;
  return uni == 0 ? 0.0 : static_cast<double>(inter) / uni;
}

// S-values by enumerating every upward path: max of decay^length.
inline std::map<std::string, double> svalues_by_paths(const OntologyGraph& g,
                                                      const std::string& id,
                                                      double decay) {
  std::map<std::string, double> best;
  std::function<void(const std::string&, double)> walk =
      [&](const std::string& node, double value) {
        auto& slot = best[node];
        slot = std::max(slot, value);
        for (const auto& p : g.get(node).parents) walk(p, value * decay);
      };
  walk(id, 1.0);
  return best;
}

inline double wang_oracle(const OntologyGraph& g, const std::string& a,
                          const std::string& b, double decay) {
  const auto sa = svalues_by_paths(g, a, decay);
  const auto sb = svalues_by_paths(g, b, decay);
  double shared = 0, ta = 0, tb = 0;
  for (const auto& [t, v] : sa) ta += v;
  for (const auto& [t, v] : sb) tb += v;
  for (const auto& [t, v] : sa) {
    if (auto it = sb.find(t); it != sb.end()) shared += v + it->second;
  }
  return shared / (ta + tb);
}

struct BruteForceResult {
  double matches = 0.0;
  std::size_t pairs = 0;
};

// Exhaustive search over all one-to-one partial pairings: maximum total
// similarity, then maximum pair count. Only for small inputs.
inline BruteForceResult best_pairing_oracle(
    const std::vector<std::vector<double>>& sim) {
  const std::size_t np = sim.size();
  const std::size_t nr = np == 0 ? 0 : sim.front().size();
  std::vector<bool> used(nr, false);
  BruteForceResult best;
  std::function<void(std::size_t, double, std::size_t)> rec =
      [&](std::size_t p, double total, std::size_t pairs) {
        if (p == np) {
          if (total > best.matches + 1e-12 ||
              (std::abs(total - best.matches) <= 1e-12 && pairs > best.pairs)) {
            best = {total, pairs};
          }
          return;
        }
        rec(p + 1, total, pairs);  // leave p unpaired
        for (std::size_t r = 0; r < nr; ++r) {
          if (used[r] || sim[p][r] <= 0.0) continue;
          used[r] = true;
          rec(p + 1, total + sim[p][r], pairs + 1);
          used[r] = false;
        }
      };
  rec(0, 0.0, 0);
  return best;
}

inline const std::vector<std::string>& vocabulary() {
  static const std::vector<std::string> kWords = {
      "ES",      "and",      "somatic", "cells",  "Hexokinase", "I",
      "of",      "PI3K",     "protein", "kinase", "α",          "tubulin",
      "binding", "receptor", "mouse",   "gene",   "β2",         "DNA",
      "µM",      "naïve",    "T",       "cell",   "expression", "in"};
  return kWords;
}

// Random text of words separated by spaces, newlines and punctuation.
inline std::string random_text(Rng& rng, std::size_t words) {
  static const std::vector<std::string> kSeparators = {
      " ", " ", " ", "  ", "\n", "-", " (", ") ", ", ", "/", ".\n"};
  std::string text;
  for (std::size_t i = 0; i < words; ++i) {
    if (i > 0) text += kSeparators[uniform(rng, 0, kSeparators.size() - 1)];
    text += vocabulary()[uniform(rng, 0, vocabulary().size() - 1)];
  }
  return text;
}

inline std::string random_concept(Rng& rng, std::size_t pool = 8) {
  return "CHEBI:" + std::to_string(uniform(rng, 1, pool));
}

// Token-aligned, contiguous, pairwise disjoint annotations only.
inline Document random_simple_document(Rng& rng, std::size_t max_words = 30) {
  Document doc;
  doc.doc_id = "doc" + std::to_string(rng() % 100000);
  doc.text = random_text(rng, uniform(rng, 1, max_words));
  const auto tokens = tokenize(doc.text);
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (coin(rng, 0.3)) {
      const std::size_t len = uniform(rng, 1, 3);
      const std::size_t last = std::min(tokens.size() - 1, i + len - 1);
      doc.annotations.emplace_back(
          random_concept(rng),
          std::vector<TextSpan>{
              TextSpan(tokens[i].span.start, tokens[last].span.end)});
      i = last + 1 + (coin(rng) ? 1 : 0);
    } else {
      ++i;
    }
  }
  return doc;
}

// Arbitrary annotations: discontinuous, overlapping, sub-word.
inline Document random_complex_document(Rng& rng, std::size_t max_words = 20) {
  Document doc;
  doc.doc_id = "cx" + std::to_string(rng() % 100000);
  doc.text = random_text(rng, uniform(rng, 2, max_words));
  const std::size_t n = code_point_length(doc.text);
  const std::size_t count = uniform(rng, 0, 6);
  for (std::size_t a = 0; a < count; ++a) {
    std::vector<TextSpan> spans;
    std::size_t pos = uniform(rng, 0, n - 1);
    const std::size_t fragments = coin(rng, 0.3) ? 2 : 1;
    for (std::size_t f = 0; f < fragments && pos < n; ++f) {
      const std::size_t end = std::min(n, pos + uniform(rng, 1, 12));
      spans.emplace_back(pos, end);
      pos = end + uniform(rng, 1, 8);
    }
    doc.annotations.emplace_back(random_concept(rng, 4), spans);
  }
  return doc;
}

// Every even token is a one-token entity; entities never touch.
inline std::vector<Document> sparse_corpus(Rng& rng, std::size_t docs) {
  std::vector<Document> corpus;
  for (std::size_t d = 0; d < docs; ++d) {
    Document doc;
    doc.doc_id = "doc" + std::to_string(d);
    const std::size_t words = uniform(rng, 2, 12);
    for (std::size_t w = 0; w < words; ++w) {
      if (w > 0) doc.text += ' ';
      const std::size_t start = code_point_length(doc.text);
      doc.text += "w" + std::to_string(uniform(rng, 0, 9));
      if (w % 2 == 0) {
        doc.annotations.emplace_back(
            random_concept(rng, 5),
            std::vector<TextSpan>{TextSpan(start, code_point_length(doc.text))});
      }
    }
    corpus.push_back(std::move(doc));
  }
  return corpus;
}

enum class Favour { kIds, kSpans };

// Gold rows with one source corrupted.
inline std::map<std::string, std::vector<Sentence>> corrupted_predictions(
    const std::vector<Document>& corpus, Favour favour) {
  std::map<std::string, std::vector<Sentence>> out;
  for (const auto& doc : corpus) {
    auto rows = encode(doc, tokenize(std::string_view(doc.text)));
    for (auto& s : rows) {
      for (auto& r : s) {
        const bool entity = !r.id_tag.is_nil();
        if (favour == Favour::kIds) {
          // Span tagger fires with a wrong dictionary id on every entity.
          if (entity) r.dict_features = {"WRONG:1"};
        } else {
          if (entity) r.dict_features = {r.id_tag.curie()};
          r.id_tag = IdTag("WRONG:2");
        }
      }
    }
    out[doc.doc_id] = std::move(rows);
  }
  return out;
}

}  // namespace crtool::testing

#endif  // CRTOOL_TESTS_TEST_SUPPORT_H_
