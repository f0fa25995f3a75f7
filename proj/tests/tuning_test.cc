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

#include <doctest.h>

#include "crtool/conll_convert.h"
#include "crtool/lexicon.h"
#include "crtool/tuning.h"
#include "test_support.h"

namespace crtool {
namespace {

using testing::Rng;
using HS = HarmonisationStrategy;
using testing::Favour;
using testing::corrupted_predictions;
using testing::sparse_corpus;

std::vector<std::string> ids(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("doc" + std::to_string(i));
  return out;
}

const StrategyScore& row_for(const std::vector<StrategyScore>& table, HS s) {
  for (const auto& r : table) {
    if (r.strategy == s) return r;
  }
  FAIL("strategy missing");
  return table.front();
}

TEST_CASE("make_folds") {
  const FoldPlan plan = make_folds(ids(67), 6, 42);
  CHECK(plan.k == 6);
  std::multiset<std::size_t> sizes;
  std::set<std::string> seen;
  for (std::size_t f = 0; f < 6; ++f) {
    const auto fold = plan.fold(f);
    sizes.insert(fold.size());
    for (const auto& id : fold) CHECK(seen.insert(id).second);
    CHECK(plan.training(f).size() == 67 - fold.size());
  }
  CHECK(sizes == std::multiset<std::size_t>{11, 11, 11, 11, 11, 12});
  CHECK(seen.size() == 67);

  auto shuffled = ids(67);
  std::reverse(shuffled.begin(), shuffled.end());
  CHECK(make_folds(shuffled, 6, 42).assignment == plan.assignment);
  CHECK(make_folds(ids(67), 6, 43).assignment != plan.assignment);

  CHECK_THROWS_AS(make_folds(ids(5), 6), Error);
  CHECK_THROWS_AS(make_folds(ids(5), 1), Error);
  CHECK_NOTHROW(make_folds(ids(6), 6));
}

TEST_CASE("grid search prefers the ID tagger when it is right") {
  Rng rng(71);
  const auto corpus = sparse_corpus(rng, 24);
  const auto source = precomputed_predictions({corrupted_predictions(corpus, Favour::kIds)});
  const FoldPlan plan = make_folds(ids(24), 4, 1);
  const ConceptSimilarity exact;
  const auto table = grid_search(corpus, source, plan, exact);
  REQUIRE(table.size() == 4);
  CHECK(row_for(table, HS::kIdsOnly).mean_f == 1.0);
  CHECK(row_for(table, HS::kIdsFirst).mean_f == 1.0);
  CHECK(row_for(table, HS::kSpansOnly).mean_f == 0.0);
  CHECK(row_for(table, HS::kSpansFirst).mean_f == 0.0);
  CHECK(row_for(table, HS::kIdsOnly).mean_ser == 0.0);
  CHECK(row_for(table, HS::kIdsOnly).f_per_cell.size() == 4);
  const auto pick = select_strategy(table);
  CHECK(pick.best == HS::kIdsOnly);
  CHECK(pick.tied == std::vector<HS>{HS::kIdsOnly, HS::kIdsFirst});
  CHECK(table.front().strategy == HS::kIdsOnly);
}

TEST_CASE("grid search prefers spans when the ID tagger is wrong") {
  Rng rng(72);
  const auto corpus = sparse_corpus(rng, 24);
  const auto source =
      precomputed_predictions({corrupted_predictions(corpus, Favour::kSpans)});
  const FoldPlan plan = make_folds(ids(24), 6, 2);
  const ConceptSimilarity exact;
  const auto table = grid_search(corpus, source, plan, exact);
  CHECK(row_for(table, HS::kSpansOnly).mean_f == 1.0);
  CHECK(row_for(table, HS::kSpansFirst).mean_f < 1.0);  // O tokens fall back
  CHECK(row_for(table, HS::kIdsOnly).mean_f == 0.0);
  const auto pick = select_strategy(table);
  CHECK(pick.best == HS::kSpansOnly);
  CHECK(pick.tied == std::vector<HS>{HS::kSpansOnly});
}

TEST_CASE("all-perfect sources tie") {
  Rng rng(73);
  const auto corpus = sparse_corpus(rng, 12);
  std::map<std::string, std::vector<Sentence>> perfect;
  for (const auto& doc : corpus) {
    auto rows = encode(doc, tokenize(std::string_view(doc.text)));
    for (auto& s : rows) {
      for (auto& r : s) {
        if (!r.id_tag.is_nil()) r.dict_features = {r.id_tag.curie()};
      }
    }
    perfect[doc.doc_id] = rows;
  }
  const ConceptSimilarity exact;
  GridSearchOptions options;
  options.repeats = 2;
  const auto table = grid_search(corpus, precomputed_predictions({perfect, perfect}),
                                 make_folds(ids(12), 3, 0), exact, options);
  for (const auto& r : table) {
    CHECK(r.mean_f == 1.0);
    CHECK(r.f_per_cell.size() == 6);
  }
  const auto pick = select_strategy(table);
  CHECK(pick.best == HS::kSpansOnly);
  CHECK(pick.tied.size() == 4);
}

TEST_CASE("grid search errors") {
  Rng rng(74);
  const auto corpus = sparse_corpus(rng, 6);
  auto preds = corrupted_predictions(corpus, Favour::kIds);
  preds.erase("doc3");
  const ConceptSimilarity exact;
  try {
    grid_search(corpus, precomputed_predictions({preds}), make_folds(ids(6), 2), exact);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("doc3") != std::string::npos);
  }
  GridSearchOptions two_runs;
  two_runs.repeats = 2;
  CHECK_THROWS_AS(grid_search(corpus, precomputed_predictions({preds}),
                              make_folds(ids(6), 2), exact, two_runs),
                  Error);
  CHECK_THROWS_AS(select_strategy({}), Error);
}

TEST_CASE("lexicon predictions are reproducible across thread counts") {
  Rng rng(75);
  // Each word has one fixed concept.
  std::vector<Document> corpus;
  for (int d = 0; d < 18; ++d) {
    Document doc;
    doc.doc_id = "doc" + std::to_string(d);
    for (int w = 0; w < 8; ++w) {
      if (w > 0) doc.text += " . ";
      const std::size_t k = testing::uniform(rng, 0, 11);
      const std::size_t start = code_point_length(doc.text);
      doc.text += "term" + std::to_string(k);
      if (k < 8) {
        doc.annotations.emplace_back(
            "CHEBI:" + std::to_string(k),
            std::vector<TextSpan>{TextSpan(start, code_point_length(doc.text))});
      }
    }
    corpus.push_back(std::move(doc));
  }
  std::vector<std::string> names;
  for (const auto& d : corpus) names.push_back(d.doc_id);
  const FoldPlan plan = make_folds(names, 3, 5);
  const ConceptSimilarity exact;
  GridSearchOptions serial, parallel;
  serial.threads = 1;
  parallel.threads = 4;
  const auto source = lexicon_predictions(nullptr);
  const auto a = grid_search(corpus, source, plan, exact, serial);
  const auto b = grid_search(corpus, source, plan, exact, parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].strategy == b[i].strategy);
    CHECK(a[i].f_per_cell == b[i].f_per_cell);
  }
  CHECK(row_for(a, HS::kIdsOnly).mean_f > 0.9);
}

}  // namespace
}  // namespace crtool
