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

#include "crtool/dict_tagger.h"

#include <algorithm>

#include "crtool/unicode.h"
#include "text_util.h"

namespace crtool {

namespace {

std::string_view greek_name(char32_t c) {
  switch (c) {
    case U'α': return "alpha";
    case U'β': return "beta";
    case U'γ': return "gamma";
    case U'δ': return "delta";
    case U'ε': return "epsilon";
    case U'ζ': return "zeta";
    case U'η': return "eta";
    case U'θ': return "theta";
    case U'ι': return "iota";
    case U'κ': return "kappa";
    case U'λ': return "lambda";
    case U'μ': return "mu";
    case U'ν': return "nu";
    case U'ξ': return "xi";
    case U'ο': return "omicron";
    case U'π': return "pi";
    case U'ρ': return "rho";
    case U'σ': case U'ς': return "sigma";
    case U'τ': return "tau";
    case U'υ': return "upsilon";
    case U'φ': return "phi";
    case U'χ': return "chi";
    case U'ψ': return "psi";
    case U'ω': return "omega";
    default: return {};
  }
}

}  // namespace

std::vector<std::string> normalize_term(std::string_view s) {
  std::u32string folded;
  for (char32_t c : nfkc_lower(to_code_points(s))) {
    if (auto name = greek_name(c); !name.empty()) {
      folded.append(name.begin(), name.end());
    } else {
      folded.push_back(is_word_char(c) ? c : U' ');
    }
  }
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < folded.size()) {
    if (folded[i] == U' ') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < folded.size() && folded[j] != U' ') ++j;
    std::u32string_view word(folded.data() + i, j - i);
    if (word.size() >= 4 && word.back() == U's') word.remove_suffix(1);
    out.push_back(to_utf8(word));
    i = j;
  }
  return out;
}

std::size_t PhraseTrie::insert(std::span<const std::string> key,
                               std::size_t next_payload) {
  std::size_t node = root();
  for (const auto& word : key) {
    auto it = nodes_[node].children.find(word);
    if (it == nodes_[node].children.end()) {
      nodes_.emplace_back();
      it = nodes_[node].children.emplace(word, nodes_.size() - 1).first;
    }
    node = it->second;
  }
  if (nodes_[node].payload == kNone) nodes_[node].payload = next_payload;
  return nodes_[node].payload;
}

std::size_t PhraseTrie::child(std::size_t node, const std::string& word) const {
  const auto& children = nodes_[node].children;
  auto it = children.find(word);
  return it == children.end() ? kNone : it->second;
}

std::size_t PhraseTrie::find(std::span<const std::string> key) const {
  std::size_t node = root();
  for (const auto& word : key) {
    node = child(node, word);
    if (node == kNone) return kNone;
  }
  return nodes_[node].payload;
}

std::vector<PhraseMatch> match_phrases(const PhraseTrie& trie,
                                       std::span<const Token> tokens) {
  std::vector<std::vector<std::string>> norm;
  norm.reserve(tokens.size());
  for (const auto& t : tokens) norm.push_back(normalize_term(t.text));

  std::vector<PhraseMatch> matches;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (norm[i].empty()) {
      ++i;
      continue;
    }
    std::optional<PhraseMatch> best;
    std::size_t node = PhraseTrie::root();
    for (std::size_t j = i; j < tokens.size() && node != PhraseTrie::kNone;
         ++j) {
      if (norm[j].empty()) continue;
      for (const auto& word : norm[j]) {
        node = trie.child(node, word);
        if (node == PhraseTrie::kNone) break;
      }
      if (node != PhraseTrie::kNone &&
          trie.payload(node) != PhraseTrie::kNone) {
        best = PhraseMatch{i, j, trie.payload(node)};
      }
    }
    if (best) {
      matches.push_back(*best);
      i = best->last_token + 1;
    } else {
      ++i;
    }
  }
  return matches;
}

bool TermIndex::add(std::string_view term, const std::string& concept_id) {
  const auto key = normalize_term(term);
  if (key.empty()) return false;
  const std::size_t slot = trie_.insert(key, entries_.size());
  if (slot == entries_.size()) entries_.emplace_back();
  auto& ids = entries_[slot];
  auto pos = std::lower_bound(ids.begin(), ids.end(), concept_id);
  if (pos == ids.end() || *pos != concept_id) ids.insert(pos, concept_id);
  return true;
}

const std::vector<std::string>& TermIndex::lookup(
    std::span<const std::string> key) const {
  static const std::vector<std::string> kEmpty;
  const std::size_t slot = trie_.find(key);
  return slot == PhraseTrie::kNone ? kEmpty : entries_[slot];
}

TermIndex build_index(
    const OntologyGraph& graph,
    std::span<const std::pair<std::string, std::string>> extra_synonyms,
    Warnings* warnings) {
  TermIndex index;
  auto add = [&](std::string_view term, const std::string& id) {
    if (!index.add(term, id)) {
      warn(warnings, "skipping term '" + std::string(term) + "' of " + id +
                         ": empty after normalisation");
    }
  };
  for (const auto& c : graph.concepts()) {
    if (c.obsolete) continue;
    if (!c.name.empty()) add(c.name, c.id);
    for (const auto& syn : c.synonyms) add(syn, c.id);
  }
  for (const auto& [term, id] : extra_synonyms) add(term, id);
  return index;
}

std::vector<std::pair<std::string, std::string>> parse_synonyms(
    std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  const auto all_lines = internal::lines(text);
  for (std::size_t n = 0; n < all_lines.size(); ++n) {
    const auto line = all_lines[n];
    if (internal::trim(line).empty() || line.front() == '#') continue;
    const auto fields = internal::split(line, '\t');
    if (fields.size() != 2 || fields[0].empty() ||
        internal::trim(fields[1]).empty()) {
      throw Error("line " + std::to_string(n + 1) +
                  ": expected 'term<TAB>CURIE'");
    }
    out.emplace_back(std::string(fields[0]),
                     std::string(internal::trim(fields[1])));
  }
  return out;
}

const std::set<std::string, std::less<>>& default_stopwords() {
  static const std::set<std::string, std::less<>> kWords = {
      "a",     "about", "above", "after", "all",   "also",  "an",    "and",
      "any",   "are",   "as",    "at",    "be",    "been",  "but",   "by",
      "can",   "could", "did",   "do",    "does",  "for",   "from",  "had",
      "has",   "have",  "he",    "her",   "his",   "how",   "i",     "if",
      "in",    "into",  "is",    "it",    "its",   "may",   "more",  "most",
      "no",    "not",   "of",    "on",    "one",   "or",    "other", "our",
      "she",   "so",    "some",  "such",  "than",  "that",  "the",   "their",
      "them",  "then",  "there", "these", "they",  "this",  "those", "to",
      "under", "up",    "upon",  "was",   "we",    "were",  "what",  "when",
      "which", "while", "who",   "will",  "with",  "within", "would", "you"};
  return kWords;
}

std::vector<std::vector<std::string>> tag(std::span<const Token> tokens,
                                          const TermIndex& index,
                                          const TagOptions& options) {
  std::vector<std::vector<std::string>> features(tokens.size());
  for (const auto& m : match_phrases(index.trie(), tokens)) {
    if (m.first_token == m.last_token) {
      const auto surface = to_utf8(nfkc_lower(to_code_points(tokens[m.first_token].text)));
      if (options.stopwords.contains(surface)) continue;
    }
    const auto& ids = index.concepts(m.payload);
    for (std::size_t t = m.first_token; t <= m.last_token; ++t) {
      features[t] = ids;
    }
  }
  return features;
}

void tag_sentences(std::vector<Sentence>& sentences, const TermIndex& index,
                   const TagOptions& options) {
  for (auto& sentence : sentences) {
    std::vector<Token> tokens;
    tokens.reserve(sentence.size());
    for (const auto& row : sentence) tokens.push_back({row.token, row.span});
    auto features = tag(tokens, index, options);
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      sentence[i].dict_features = std::move(features[i]);
    }
  }
}

}  // namespace crtool
