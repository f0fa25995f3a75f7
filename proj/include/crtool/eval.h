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

#ifndef CRTOOL_EVAL_H_
#define CRTOOL_EVAL_H_

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crtool/model.h"
#include "crtool/ontology.h"

namespace crtool {

// Fractional match accounting. Each paired (pred, ref) with similarity m adds
// m to matches and 1 - m to substitutions.
struct EvalCounts {
  double matches = 0.0;
  double substitutions = 0.0;
  long insertions = 0;
  long deletions = 0;

  double reference_count() const { return matches + substitutions + deletions; }
  double prediction_count() const {
    return matches + substitutions + insertions;
  }

  EvalCounts& operator+=(const EvalCounts& other);
  friend EvalCounts operator+(EvalCounts a, const EvalCounts& b) {
    return a += b;
  }
  bool operator==(const EvalCounts&) const = default;
};

struct PRF {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

enum class SerDenominator {
  kReference,  // M + S + D
  kAllSlots,   // M + S + D + I
};

std::string_view to_string(SerDenominator d);
SerDenominator parse_ser_denominator(std::string_view name);

// Character Jaccard of the spans times concept similarity.
double pair_similarity(const Annotation& pred, const Annotation& ref,
                       const ConceptSimilarity& similarity);

struct Pairing {
  std::size_t pred = 0;
  std::size_t ref = 0;
  double similarity = 0.0;
};

enum class PairingMethod {
  kOptimal,  // maximum total similarity, then most pairs
  kGreedy,   // descending similarity
};

std::string_view to_string(PairingMethod m);
PairingMethod parse_pairing_method(std::string_view name);

// Greedy one-to-one pairing in descending similarity over pairs with m > 0.
// Ties prefer the smaller ref start, then the smaller pred start.
std::vector<Pairing> greedy_pairing(std::span<const Annotation> preds,
                                    std::span<const Annotation> refs,
                                    const ConceptSimilarity& similarity);

// One-to-one pairing maximising the summed similarity (ties: more pairs),
// solved exactly per connected component of the overlap graph.
std::vector<Pairing> optimal_pairing(std::span<const Annotation> preds,
                                     std::span<const Annotation> refs,
                                     const ConceptSimilarity& similarity);

EvalCounts counts_from_pairing(std::span<const Pairing> pairs,
                               std::size_t pred_count, std::size_t ref_count);

EvalCounts score_document(std::span<const Annotation> preds,
                          std::span<const Annotation> refs,
                          const ConceptSimilarity& similarity,
                          PairingMethod method = PairingMethod::kOptimal);

PRF fscore(const EvalCounts& c);

// Returns +infinity when the denominator is 0 but errors were made, and 0
// for 0/0.
double slot_error_rate(const EvalCounts& c,
                       SerDenominator denominator = SerDenominator::kReference);

// Keeps only annotations whose concept is absent from train_labels.
std::pair<std::vector<Annotation>, std::vector<Annotation>> filter_unseen(
    std::span<const Annotation> preds, std::span<const Annotation> refs,
    const std::set<std::string, std::less<>>& train_labels);

// Tab-separated report: set, strategy, M, S, I, D, P, R, F, SER.
std::string report_header();
std::string report_row(std::string_view set_name, std::string_view strategy,
                       const EvalCounts& c,
                       SerDenominator denominator = SerDenominator::kReference);

}  // namespace crtool

#endif  // CRTOOL_EVAL_H_
