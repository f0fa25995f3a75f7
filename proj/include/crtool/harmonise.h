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

#ifndef CRTOOL_HARMONISE_H_
#define CRTOOL_HARMONISE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crtool/model.h"

namespace crtool {

enum class HarmonisationStrategy { kSpansOnly, kIdsOnly, kSpansFirst, kIdsFirst };

inline constexpr HarmonisationStrategy kAllHarmonisationStrategies[] = {
    HarmonisationStrategy::kSpansOnly, HarmonisationStrategy::kIdsOnly,
    HarmonisationStrategy::kSpansFirst, HarmonisationStrategy::kIdsFirst};

std::string_view to_string(HarmonisationStrategy s);
HarmonisationStrategy parse_harmonisation_strategy(std::string_view name);

// What the three prediction sources say about one token.
struct TokenPrediction {
  SpanTag span_tag = SpanTag::O;      // span tagger
  IdTag nn_id;                        // ID tagger
  std::vector<std::string> dict_ids;  // dictionary, sorted

  static TokenPrediction from_row(const ConllRow& row) {
    return {row.span_tag, row.id_tag, row.dict_features};
  }
};

// Which source a token decision came from.
enum class DecisionSource { kNone, kSpanDict, kIdTagger };

struct TokenDecision {
  SpanTag span_tag = SpanTag::O;
  IdTag id;
  DecisionSource source = DecisionSource::kNone;

  bool is_null() const { return source == DecisionSource::kNone; }
};

// spans-only: a relevant span tag backed by a dictionary hit keeps its tag
// and takes the lowest dictionary id; everything else is O/NIL.
// ids-only: a non-NIL ID-tagger output yields a placeholder S tag with that
// id (span tags are re-derived from id runs later); NIL yields O/NIL.
// spans-first / ids-first: the first rule, backing off to the other when it
// yields O/NIL.
TokenDecision harmonise_token(const TokenPrediction& p,
                              HarmonisationStrategy strategy);

// Assembles annotations for one sentence. Span/dict tokens are grouped by
// tolerant IOBES decoding and take the lowest id common to the group (the
// group splits where that intersection would become empty); ID-tagger tokens
// group into runs of identical ids. Adjacent groups from different sources
// merge only when their ids are equal.
std::vector<Annotation> harmonise_sentence(std::span<const ConllRow> rows,
                                           HarmonisationStrategy strategy);
std::vector<Annotation> harmonise_document(
    const std::vector<Sentence>& sentences, HarmonisationStrategy strategy);

}  // namespace crtool

#endif  // CRTOOL_HARMONISE_H_
