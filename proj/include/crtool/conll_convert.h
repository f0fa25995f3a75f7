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

#ifndef CRTOOL_CONLL_CONVERT_H_
#define CRTOOL_CONLL_CONVERT_H_

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crtool/diagnostics.h"
#include "crtool/eval.h"
#include "crtool/model.h"
#include "crtool/ontology.h"
#include "crtool/simplify.h"
#include "crtool/standoff_io.h"

namespace crtool {

// Token-level labels for a simplified document. Sentences break at line
// breaks in the text that no annotation crosses. Throws Error if an
// annotation is discontinuous, not token-aligned, or overlaps another.
std::vector<Sentence> encode(const Document& doc, std::span<const Token> tokens);

// Inclusive token index ranges of the entities in a tag sequence. Tolerant:
// S is a single-token entity; B opens; an entity closes at E, at O/S/B or at
// the end; orphan I/E open an entity as if B.
std::vector<std::pair<std::size_t, std::size_t>> decode_blocks(
    std::span<const SpanTag> tags);

enum class IdSource {
  kIdTag,  // majority non-NIL id_tag in the block, ties to the lowest
  kDict,   // majority dictionary feature, ties to the lowest
  kGiven,  // one fixed concept for every entity
};

std::string_view to_string(IdSource s);
IdSource parse_id_source(std::string_view name);

// Blocks without any usable concept are dropped.
std::vector<Annotation> decode_iobes(std::span<const ConllRow> rows,
                                     IdSource source,
                                     std::string_view given_concept = {});
std::vector<Annotation> decode_iobes(const std::vector<Sentence>& sentences,
                                     IdSource source,
                                     std::string_view given_concept = {});

// Rewrites span tags from maximal runs of identical non-NIL ids.
std::vector<ConllRow> derive_spans_from_id_runs(std::vector<ConllRow> rows);

// Gold -> simplify -> CoNLL -> stand-off, scored against the original gold.
EvalCounts roundtrip_upper_bound(std::span<const Document> corpus,
                                 UnifyStrategy unify_strategy,
                                 UnnestStrategy unnest_strategy,
                                 const ConceptSimilarity& similarity,
                                 Warnings* warnings = nullptr);

}  // namespace crtool

#endif  // CRTOOL_CONLL_CONVERT_H_
