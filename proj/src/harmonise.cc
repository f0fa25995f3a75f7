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

#include "crtool/harmonise.h"

#include <algorithm>
#include <iterator>

#include "crtool/conll_convert.h"

namespace crtool {

std::string_view to_string(HarmonisationStrategy s) {
  switch (s) {
    case HarmonisationStrategy::kSpansOnly: return "spans-only";
    case HarmonisationStrategy::kIdsOnly: return "ids-only";
    case HarmonisationStrategy::kSpansFirst: return "spans-first";
    case HarmonisationStrategy::kIdsFirst: return "ids-first";
  }
  return "";
}

HarmonisationStrategy parse_harmonisation_strategy(std::string_view name) {
  for (auto s : kAllHarmonisationStrategies) {
    if (to_string(s) == name) return s;
  }
  throw Error("unknown harmonisation strategy '" + std::string(name) + "'");
}

namespace {

TokenDecision spans_only(const TokenPrediction& p) {
  if (!is_relevant(p.span_tag) || p.dict_ids.empty()) return {};
  const auto lowest = std::min_element(p.dict_ids.begin(), p.dict_ids.end());
  return {p.span_tag, IdTag(*lowest), DecisionSource::kSpanDict};
}

TokenDecision ids_only(const TokenPrediction& p) {
  if (p.nn_id.is_nil()) return {};
  return {SpanTag::S, p.nn_id, DecisionSource::kIdTagger};
}

}  // namespace

TokenDecision harmonise_token(const TokenPrediction& p,
                              HarmonisationStrategy strategy) {
  switch (strategy) {
    case HarmonisationStrategy::kSpansOnly:
      return spans_only(p);
    case HarmonisationStrategy::kIdsOnly:
      return ids_only(p);
    case HarmonisationStrategy::kSpansFirst: {
      TokenDecision d = spans_only(p);
      return d.is_null() ? ids_only(p) : d;
    }
    case HarmonisationStrategy::kIdsFirst: {
      TokenDecision d = ids_only(p);
      return d.is_null() ? spans_only(p) : d;
    }
  }
  return {};
}

namespace {

struct Group {
  std::size_t first = 0;
  std::size_t last = 0;  // inclusive
  std::string concept_id;
  DecisionSource source = DecisionSource::kNone;
};

std::vector<std::string> intersect(const std::vector<std::string>& a,
                                   const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

// Splits a span/dict block into maximal runs whose dictionary features
// share at least one id; each run takes the lowest shared id.
void split_by_features(std::span<const ConllRow> rows, std::size_t first,
                       std::size_t last, std::vector<Group>& out) {
  std::size_t begin = first;
  std::vector<std::string> common = rows[first].dict_features;
  for (std::size_t i = first + 1; i <= last + 1; ++i) {
    std::vector<std::string> next;
    if (i <= last) next = intersect(common, rows[i].dict_features);
    if (i > last || next.empty()) {
      out.push_back({begin, i - 1, common.front(), DecisionSource::kSpanDict});
      if (i <= last) {
        begin = i;
        common = rows[i].dict_features;
      }
    } else {
      common = std::move(next);
    }
  }
}

}  // namespace

std::vector<Annotation> harmonise_sentence(std::span<const ConllRow> rows,
                                           HarmonisationStrategy strategy) {
  std::vector<TokenDecision> decisions;
  decisions.reserve(rows.size());
  for (const auto& row : rows) {
    decisions.push_back(
        harmonise_token(TokenPrediction::from_row(row), strategy));
  }

  std::vector<Group> groups;
  std::size_t i = 0;
  while (i < rows.size()) {
    const DecisionSource source = decisions[i].source;
    std::size_t j = i + 1;
    while (j < rows.size() && decisions[j].source == source) ++j;
    if (source == DecisionSource::kSpanDict) {
      std::vector<SpanTag> tags;
      for (std::size_t k = i; k < j; ++k) tags.push_back(decisions[k].span_tag);
      for (const auto& [b, e] : decode_blocks(tags)) {
        split_by_features(rows, i + b, i + e, groups);
      }
    } else if (source == DecisionSource::kIdTagger) {
      std::size_t k = i;
      while (k < j) {
        std::size_t m = k + 1;
        while (m < j && decisions[m].id == decisions[k].id) ++m;
        groups.push_back({k, m - 1, decisions[k].id.curie(),
                          DecisionSource::kIdTagger});
        k = m;
      }
    }
    i = j;
  }

  std::vector<Annotation> out;
  DecisionSource last_source = DecisionSource::kNone;
  std::size_t last_end = 0;
  for (const auto& g : groups) {
    const bool merge = !out.empty() && g.first == last_end + 1 &&
                       g.source != last_source &&
                       g.concept_id == out.back().concept_id;
    if (merge) {
      out.back().spans.front().end = rows[g.last].span.end;
    } else {
      out.emplace_back(g.concept_id,
                       std::vector<TextSpan>{TextSpan(rows[g.first].span.start,
                                                      rows[g.last].span.end)});
    }
    last_source = g.source;
    last_end = g.last;
  }
  for (auto& ann : out) {
    std::string text;
    for (const auto& row : rows) {
      if (row.span.start < ann.start() || row.span.end > ann.end()) continue;
      if (!text.empty()) text += ' ';
      text += row.token;
    }
    ann.text = std::move(text);
  }
  return out;
}

std::vector<Annotation> harmonise_document(
    const std::vector<Sentence>& sentences, HarmonisationStrategy strategy) {
  std::vector<Annotation> out;
  for (const auto& s : sentences) {
    auto part = harmonise_sentence(s, strategy);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace crtool
