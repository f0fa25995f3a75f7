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

#include "crtool/lexicon.h"

#include <sstream>

#include "crtool/conll_convert.h"
#include "text_util.h"

namespace crtool {

void LexiconTagger::add(std::vector<std::string> key,
                        const std::string& concept_id, std::size_t count) {
  const std::size_t slot = trie_.insert(key, entries_.size());
  if (slot == entries_.size()) entries_.push_back({std::move(key), {}});
  entries_[slot].counts[concept_id] += count;
}

void LexiconTagger::train(const std::vector<Sentence>& sentences) {
  for (const auto& sentence : sentences) {
    std::vector<SpanTag> tags;
    for (const auto& row : sentence) tags.push_back(row.span_tag);
    for (const auto& [first, last] : decode_blocks(tags)) {
      const auto block = std::span<const ConllRow>(sentence).subspan(
          first, last - first + 1);
      const auto anns = decode_iobes(block, IdSource::kIdTag);
      if (anns.empty()) continue;
      std::vector<std::string> key;
      for (const auto& row : block) {
        auto words = normalize_term(row.token);
        key.insert(key.end(), words.begin(), words.end());
      }
      if (key.empty()) continue;
      add(std::move(key), anns.front().concept_id, 1);
    }
  }
}

const std::string& LexiconTagger::best(const Entry& e) {
  const std::string* winner = nullptr;
  std::size_t top = 0;
  for (const auto& [id, n] : e.counts) {
    if (n > top) {
      winner = &id;
      top = n;
    }
  }
  return *winner;
}

void LexiconTagger::tag(std::vector<Sentence>& sentences) const {
  for (auto& sentence : sentences) {
    std::vector<Token> tokens;
    tokens.reserve(sentence.size());
    for (auto& row : sentence) {
      tokens.push_back({row.token, row.span});
      row.span_tag = SpanTag::O;
      row.id_tag = IdTag::nil();
    }
    for (const auto& m : match_phrases(trie_, tokens)) {
      const IdTag id(best(entries_[m.payload]));
      for (std::size_t t = m.first_token; t <= m.last_token; ++t) {
        sentence[t].id_tag = id;
        sentence[t].span_tag = SpanTag::I;
      }
      if (m.first_token == m.last_token) {
        sentence[m.first_token].span_tag = SpanTag::S;
      } else {
        sentence[m.first_token].span_tag = SpanTag::B;
        sentence[m.last_token].span_tag = SpanTag::E;
      }
    }
  }
}

std::set<std::string> LexiconTagger::labels() const {
  std::set<std::string> out;
  for (const auto& e : entries_) {
    for (const auto& [id, n] : e.counts) out.insert(id);
  }
  return out;
}

std::string LexiconTagger::serialize() const {
  std::ostringstream out;
  for (const auto& e : entries_) {
    std::string key;
    for (const auto& w : e.key) {
      if (!key.empty()) key += ' ';
      key += w;
    }
    for (const auto& [id, n] : e.counts) {
      out << id << '\t' << n << '\t' << key << '\n';
    }
  }
  return out.str();
}

LexiconTagger LexiconTagger::deserialize(std::string_view text) {
  LexiconTagger lexicon;
  const auto all_lines = internal::lines(text);
  for (std::size_t n = 0; n < all_lines.size(); ++n) {
    if (internal::trim(all_lines[n]).empty()) continue;
    const auto fields = internal::split(all_lines[n], '\t');
    const auto count = fields.size() == 3 ? internal::parse_size(fields[1])
                                          : std::nullopt;
    if (!count || fields[0].empty() || fields[2].empty()) {
      throw Error("lexicon model line " + std::to_string(n + 1) +
                  ": expected 'CURIE<TAB>count<TAB>key'");
    }
    std::vector<std::string> key;
    for (auto w : internal::split(fields[2], ' ')) {
      if (!w.empty()) key.emplace_back(w);
    }
    lexicon.add(std::move(key), std::string(fields[0]), *count);
  }
  return lexicon;
}

}  // namespace crtool
