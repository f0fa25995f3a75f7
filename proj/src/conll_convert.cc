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

#include "crtool/conll_convert.h"

#include <algorithm>
#include <map>

#include "crtool/unicode.h"

namespace crtool {

std::vector<Sentence> encode(const Document& doc,
                             std::span<const Token> tokens) {
  const std::u32string text = to_code_points(doc.text);

  std::vector<Annotation> anns = doc.annotations;
  std::sort(anns.begin(), anns.end());
  // Token index of each annotation's first and last token.
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (std::size_t a = 0; a < anns.size(); ++a) {
    const Annotation& ann = anns[a];
    if (ann.discontinuous()) {
      throw Error(doc.doc_id + ": cannot encode discontinuous annotation " +
                  ann.concept_id);
    }
    if (a > 0 && anns[a - 1].end() > ann.start()) {
      throw Error(doc.doc_id + ": cannot encode overlapping annotations " +
                  anns[a - 1].concept_id + " and " + ann.concept_id);
    }
    auto first = std::find_if(tokens.begin(), tokens.end(), [&](const Token& t) {
      return t.span.start == ann.start();
    });
    auto last = std::find_if(first, tokens.end(), [&](const Token& t) {
      return t.span.end == ann.end();
    });
    if (first == tokens.end() || last == tokens.end()) {
      throw Error(doc.doc_id + ": annotation " + ann.concept_id + " at " +
                  std::to_string(ann.start()) + "-" +
                  std::to_string(ann.end()) + " is not token-aligned");
    }
    ranges.emplace_back(first - tokens.begin(), last - tokens.begin());
  }

  std::vector<ConllRow> rows;
  rows.reserve(tokens.size());
  for (const auto& t : tokens) {
    rows.push_back({t.text, t.span, SpanTag::O, IdTag::nil(), {}});
  }
  std::vector<bool> inside(tokens.size() + 1, false);
  for (std::size_t a = 0; a < anns.size(); ++a) {
    const auto [first, last] = ranges[a];
    for (std::size_t i = first; i <= last; ++i) {
      rows[i].id_tag = IdTag(anns[a].concept_id);
      rows[i].span_tag = SpanTag::I;
      if (i > first) inside[i] = true;
    }
    if (first == last) {
      rows[first].span_tag = SpanTag::S;
    } else {
      rows[first].span_tag = SpanTag::B;
      rows[last].span_tag = SpanTag::E;
    }
  }

  std::vector<Sentence> sentences;
  Sentence current;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && !inside[i]) {
      const auto gap = std::u32string_view(text).substr(
          rows[i - 1].span.end, rows[i].span.start - rows[i - 1].span.end);
      if (gap.find(U'\n') != std::u32string_view::npos && !current.empty()) {
        sentences.push_back(std::move(current));
        current.clear();
      }
    }
    current.push_back(std::move(rows[i]));
  }
  if (!current.empty()) sentences.push_back(std::move(current));
  return sentences;
}

std::vector<std::pair<std::size_t, std::size_t>> decode_blocks(
    std::span<const SpanTag> tags) {
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  bool open = false;
  std::size_t begin = 0;
  auto close = [&](std::size_t last) {
    if (open) blocks.emplace_back(begin, last);
    open = false;
  };
  for (std::size_t i = 0; i < tags.size(); ++i) {
    switch (tags[i]) {
      case SpanTag::O:
        if (open) close(i - 1);
        break;
      case SpanTag::S:
        if (open) close(i - 1);
        blocks.emplace_back(i, i);
        break;
      case SpanTag::B:
        if (open) close(i - 1);
        open = true;
        begin = i;
        break;
      case SpanTag::I:
        if (!open) {
          open = true;
          begin = i;
        }
        break;
      case SpanTag::E:
        if (!open) begin = i;
        open = true;
        close(i);
        break;
    }
  }
  if (open) close(tags.size() - 1);
  return blocks;
}

std::string_view to_string(IdSource s) {
  switch (s) {
    case IdSource::kIdTag: return "id_tag";
    case IdSource::kDict: return "dict";
    case IdSource::kGiven: return "given";
  }
  return "";
}

IdSource parse_id_source(std::string_view name) {
  for (auto s : {IdSource::kIdTag, IdSource::kDict, IdSource::kGiven}) {
    if (to_string(s) == name) return s;
  }
  throw Error("unknown id source '" + std::string(name) + "'");
}

namespace {

// Most frequent key; ties go to the lexicographically lowest.
std::string majority(const std::map<std::string, std::size_t>& counts) {
  std::string best;
  std::size_t best_count = 0;
  for (const auto& [id, n] : counts) {
    if (n > best_count) {
      best = id;
      best_count = n;
    }
  }
  return best;
}

std::string block_text(std::span<const ConllRow> rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && rows[i].span.start > rows[i - 1].span.end) out += ' ';
    out += rows[i].token;
  }
  return out;
}

}  // namespace

std::vector<Annotation> decode_iobes(std::span<const ConllRow> rows,
                                     IdSource source,
                                     std::string_view given_concept) {
  if (source == IdSource::kGiven && given_concept.empty()) {
    throw Error("decoding with a given concept requires a concept id");
  }
  std::vector<SpanTag> tags;
  tags.reserve(rows.size());
  for (const auto& r : rows) tags.push_back(r.span_tag);

  std::vector<Annotation> out;
  for (const auto& [first, last] : decode_blocks(tags)) {
    const auto block = rows.subspan(first, last - first + 1);
    std::string concept_id;
    if (source == IdSource::kGiven) {
      concept_id = std::string(given_concept);
    } else {
      std::map<std::string, std::size_t> counts;
      for (const auto& r : block) {
        if (source == IdSource::kIdTag) {
          if (!r.id_tag.is_nil()) ++counts[r.id_tag.curie()];
        } else {
          for (const auto& f : r.dict_features) ++counts[f];
        }
      }
      concept_id = majority(counts);
    }
    if (concept_id.empty()) continue;
    out.emplace_back(std::move(concept_id),
                     std::vector<TextSpan>{TextSpan(block.front().span.start,
                                                    block.back().span.end)},
                     block_text(block));
  }
  return out;
}

std::vector<Annotation> decode_iobes(const std::vector<Sentence>& sentences,
                                     IdSource source,
                                     std::string_view given_concept) {
  std::vector<Annotation> out;
  for (const auto& s : sentences) {
    auto part = decode_iobes(std::span<const ConllRow>(s), source, given_concept);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<ConllRow> derive_spans_from_id_runs(std::vector<ConllRow> rows) {
  std::size_t i = 0;
  while (i < rows.size()) {
    if (rows[i].id_tag.is_nil()) {
      rows[i++].span_tag = SpanTag::O;
      continue;
    }
    std::size_t j = i + 1;
    while (j < rows.size() && rows[j].id_tag == rows[i].id_tag) ++j;
    if (j - i == 1) {
      rows[i].span_tag = SpanTag::S;
    } else {
      rows[i].span_tag = SpanTag::B;
      for (std::size_t k = i + 1; k + 1 < j; ++k) rows[k].span_tag = SpanTag::I;
      rows[j - 1].span_tag = SpanTag::E;
    }
    i = j;
  }
  return rows;
}

EvalCounts roundtrip_upper_bound(std::span<const Document> corpus,
                                 UnifyStrategy unify_strategy,
                                 UnnestStrategy unnest_strategy,
                                 const ConceptSimilarity& similarity,
                                 Warnings* warnings) {
  EvalCounts total;
  for (const auto& gold : corpus) {
    const auto tokens = tokenize(gold.text);
    const Document simple =
        simplify(gold, unify_strategy, unnest_strategy, warnings);
    const auto restored = decode_iobes(encode(simple, tokens), IdSource::kIdTag);
    total += score_document(restored, gold.annotations, similarity);
  }
  return total;
}

}  // namespace crtool
