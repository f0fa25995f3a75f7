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

#ifndef CRTOOL_LEXICON_H_
#define CRTOOL_LEXICON_H_

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crtool/dict_tagger.h"
#include "crtool/model.h"

namespace crtool {

// Memorises the most frequent concept of every normalised entity surface
// form seen in training CoNLL data and replays it by longest-leftmost
// matching. A stand-in prediction source: it can only emit training labels.
class LexiconTagger {
 public:
  // Adds the gold entities of one document (span_tag + id_tag columns).
  void train(const std::vector<Sentence>& sentences);

  // Sets span_tag and id_tag of every row; dict_features are kept.
  void tag(std::vector<Sentence>& sentences) const;

  std::set<std::string> labels() const;
  std::size_t size() const { return entries_.size(); }

  std::string serialize() const;
  static LexiconTagger deserialize(std::string_view text);

 private:
  struct Entry {
    std::vector<std::string> key;
    std::map<std::string, std::size_t> counts;
  };
  // Most frequent concept of an entry; ties go to the lowest id.
  static const std::string& best(const Entry& e);
  void add(std::vector<std::string> key, const std::string& concept_id,
           std::size_t count);

  PhraseTrie trie_;
  std::vector<Entry> entries_;
};

}  // namespace crtool

#endif  // CRTOOL_LEXICON_H_
