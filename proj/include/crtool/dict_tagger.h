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

#ifndef CRTOOL_DICT_TAGGER_H_
#define CRTOOL_DICT_TAGGER_H_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crtool/diagnostics.h"
#include "crtool/model.h"
#include "crtool/ontology.h"
#include "crtool/standoff_io.h"

namespace crtool {

// NFKC + lower-case, Greek letters spelled out, punctuation to spaces,
// whitespace tokenisation, trailing plural "s" stripped from tokens of four
// or more characters.
std::vector<std::string> normalize_term(std::string_view s);

// Word-level trie over normalised token sequences. Each terminal key holds a
// payload index chosen by the owner.
class PhraseTrie {
 public:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // Returns the payload slot of the key, creating it with next_payload when
  // the key is new.
  std::size_t insert(std::span<const std::string> key, std::size_t next_payload);
  std::size_t find(std::span<const std::string> key) const;
  std::size_t child(std::size_t node, const std::string& word) const;
  std::size_t payload(std::size_t node) const { return nodes_[node].payload; }
  static constexpr std::size_t root() { return 0; }

 private:
  struct Node {
    std::map<std::string, std::size_t, std::less<>> children;
    std::size_t payload = kNone;
  };
  std::vector<Node> nodes_{Node{}};
};

// A longest-leftmost match over document tokens.
struct PhraseMatch {
  std::size_t first_token = 0;
  std::size_t last_token = 0;  // inclusive
  std::size_t payload = 0;
};

// Greedy left-to-right longest match. Tokens that normalise to nothing
// (punctuation) may sit inside a match but never start or end one.
std::vector<PhraseMatch> match_phrases(const PhraseTrie& trie,
                                       std::span<const Token> tokens);

class TermIndex {
 public:
  // Adds term -> concept; returns false when the term normalises to nothing.
  bool add(std::string_view term, const std::string& concept_id);

  // Sorted CURIEs for a normalised key, empty when absent.
  const std::vector<std::string>& lookup(std::span<const std::string> key) const;
  std::size_t key_count() const { return entries_.size(); }
  const PhraseTrie& trie() const { return trie_; }
  const std::vector<std::string>& concepts(std::size_t payload) const {
    return entries_[payload];
  }

 private:
  PhraseTrie trie_;
  std::vector<std::vector<std::string>> entries_;
};

// Names and synonyms of non-obsolete concepts plus the extra pairs.
TermIndex build_index(
    const OntologyGraph& graph,
    std::span<const std::pair<std::string, std::string>> extra_synonyms = {},
    Warnings* warnings = nullptr);

// "term<TAB>CURIE" lines.
std::vector<std::pair<std::string, std::string>> parse_synonyms(
    std::string_view text);

// Closed-class English words suppressed as single-token matches.
const std::set<std::string, std::less<>>& default_stopwords();

struct TagOptions {
  std::set<std::string, std::less<>> stopwords = default_stopwords();
};

// Per-token sorted dictionary features.
std::vector<std::vector<std::string>> tag(std::span<const Token> tokens,
                                          const TermIndex& index,
                                          const TagOptions& options = {});

// Fills dict_features of existing CoNLL rows in place.
void tag_sentences(std::vector<Sentence>& sentences, const TermIndex& index,
                   const TagOptions& options = {});

}  // namespace crtool

#endif  // CRTOOL_DICT_TAGGER_H_
