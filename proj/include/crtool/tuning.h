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

#ifndef CRTOOL_TUNING_H_
#define CRTOOL_TUNING_H_

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "crtool/dict_tagger.h"
#include "crtool/eval.h"
#include "crtool/harmonise.h"
#include "crtool/model.h"
#include "crtool/ontology.h"
#include "crtool/simplify.h"

namespace crtool {

// Document-level k-fold partition.
struct FoldPlan {
  std::size_t k = 0;
  std::map<std::string, std::size_t> assignment;  // doc_id -> fold

  std::vector<std::string> fold(std::size_t index) const;
  std::vector<std::string> training(std::size_t held_out) const;
};

inline constexpr std::size_t kDefaultFolds = 6;

// Sorts the ids, shuffles them with a seeded Mersenne Twister and deals them
// round-robin, so fold sizes differ by at most one.
FoldPlan make_folds(std::vector<std::string> doc_ids,
                    std::size_t k = kDefaultFolds, std::uint64_t seed = 0);

// Prediction rows (span tag, id tag and dictionary columns) for one held-out
// document, given the training documents of its fold and the run index.
using PredictionSource = std::function<std::vector<Sentence>(
    const Document& held_out, std::span<const Document* const> training,
    std::size_t run)>;

// Fixed prediction files, one map per run. Throws Error naming the document
// when predictions are missing.
PredictionSource precomputed_predictions(
    std::vector<std::map<std::string, std::vector<Sentence>>> runs);

// Trains a LexiconTagger on the simplified training documents and tags the
// held-out one; dictionary features come from index when given.
PredictionSource lexicon_predictions(const TermIndex* index,
                                     UnifyStrategy unify = UnifyStrategy::kFirstSpan,
                                     UnnestStrategy unnest = UnnestStrategy::kKeepLonger);

struct StrategyScore {
  HarmonisationStrategy strategy = HarmonisationStrategy::kSpansOnly;
  double mean_f = 0.0;
  double mean_ser = 0.0;
  std::vector<double> f_per_cell;    // fold-major, then run
  std::vector<double> ser_per_cell;
};

struct GridSearchOptions {
  std::vector<HarmonisationStrategy> strategies{
      std::begin(kAllHarmonisationStrategies),
      std::end(kAllHarmonisationStrategies)};
  std::size_t repeats = 1;
  std::size_t threads = 0;  // 0: hardware concurrency
  PairingMethod pairing = PairingMethod::kOptimal;
  SerDenominator ser_denominator = SerDenominator::kReference;
};

// Scores every strategy on every held-out fold and run, ranked by mean F
// (descending), then mean SER (ascending), then strategy order.
std::vector<StrategyScore> grid_search(std::span<const Document> corpus,
                                       const PredictionSource& source,
                                       const FoldPlan& plan,
                                       const ConceptSimilarity& similarity,
                                       const GridSearchOptions& options = {});

struct StrategySelection {
  HarmonisationStrategy best = HarmonisationStrategy::kSpansOnly;
  // Every strategy whose mean F equals the best one, best first.
  std::vector<HarmonisationStrategy> tied;
};

StrategySelection select_strategy(std::span<const StrategyScore> table);

}  // namespace crtool

#endif  // CRTOOL_TUNING_H_
