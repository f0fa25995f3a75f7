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

#include "crtool/tuning.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "crtool/conll_convert.h"
#include "crtool/lexicon.h"
#include "crtool/standoff_io.h"

namespace crtool {

std::vector<std::string> FoldPlan::fold(std::size_t index) const {
  std::vector<std::string> out;
  for (const auto& [id, f] : assignment) {
    if (f == index) out.push_back(id);
  }
  return out;
}

std::vector<std::string> FoldPlan::training(std::size_t held_out) const {
  std::vector<std::string> out;
  for (const auto& [id, f] : assignment) {
    if (f != held_out) out.push_back(id);
  }
  return out;
}

FoldPlan make_folds(std::vector<std::string> doc_ids, std::size_t k,
                    std::uint64_t seed) {
  if (k < 2) throw Error("at least 2 folds are required");
  std::sort(doc_ids.begin(), doc_ids.end());
  doc_ids.erase(std::unique(doc_ids.begin(), doc_ids.end()), doc_ids.end());
  if (k > doc_ids.size()) {
    throw Error("cannot split " + std::to_string(doc_ids.size()) +
                " documents into " + std::to_string(k) + " folds");
  }
  // Explicit Fisher-Yates: std::shuffle's output is implementation-defined.
  std::mt19937_64 rng(seed);
  for (std::size_t i = doc_ids.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(doc_ids[i], doc_ids[j]);
  }
  FoldPlan plan;
  plan.k = k;
  for (std::size_t i = 0; i < doc_ids.size(); ++i) {
    plan.assignment[doc_ids[i]] = i % k;
  }
  return plan;
}

PredictionSource precomputed_predictions(
    std::vector<std::map<std::string, std::vector<Sentence>>> runs) {
  auto shared =
      std::make_shared<const std::vector<std::map<std::string, std::vector<Sentence>>>>(
          std::move(runs));
  return [shared](const Document& held_out, std::span<const Document* const>,
                  std::size_t run) -> std::vector<Sentence> {
    if (run >= shared->size()) {
      throw Error("no prediction run " + std::to_string(run + 1) +
                  " (have " + std::to_string(shared->size()) + ")");
    }
    const auto& docs = (*shared)[run];
    auto it = docs.find(held_out.doc_id);
    if (it == docs.end()) {
      throw Error("missing predictions for document " + held_out.doc_id +
                  " in run " + std::to_string(run + 1));
    }
    return it->second;
  };
}

PredictionSource lexicon_predictions(const TermIndex* index,
                                     UnifyStrategy unify,
                                     UnnestStrategy unnest) {
  // One trained lexicon per distinct training set, shared across the
  // documents of a fold.
  struct Cache {
    std::mutex mu;
    std::map<std::vector<std::string>, std::shared_ptr<const LexiconTagger>>
        models;
  };
  auto cache = std::make_shared<Cache>();
  return [=](const Document& held_out,
             std::span<const Document* const> training,
             std::size_t) -> std::vector<Sentence> {
    std::vector<std::string> key;
    for (const Document* doc : training) key.push_back(doc->doc_id);
    std::shared_ptr<const LexiconTagger> model;
    {
      std::lock_guard<std::mutex> lock(cache->mu);
      auto it = cache->models.find(key);
      if (it != cache->models.end()) model = it->second;
    }
    if (!model) {
      auto trained = std::make_shared<LexiconTagger>();
      for (const Document* doc : training) {
        const auto tokens = tokenize(doc->text);
        trained->train(encode(simplify(*doc, unify, unnest), tokens));
      }
      std::lock_guard<std::mutex> lock(cache->mu);
      model = cache->models.emplace(key, std::move(trained)).first->second;
    }
    const auto tokens = tokenize(held_out.text);
    Document blank = held_out;
    blank.annotations.clear();
    auto rows = encode(blank, tokens);
    model->tag(rows);
    if (index != nullptr) tag_sentences(rows, *index);
    return rows;
  };
}

std::vector<StrategyScore> grid_search(std::span<const Document> corpus,
                                       const PredictionSource& source,
                                       const FoldPlan& plan,
                                       const ConceptSimilarity& similarity,
                                       const GridSearchOptions& options) {
  if (options.strategies.empty()) throw Error("no strategies to evaluate");
  if (options.repeats == 0) throw Error("repeat count must be positive");
  std::map<std::string, const Document*> by_id;
  for (const auto& doc : corpus) by_id[doc.doc_id] = &doc;
  for (const auto& [id, f] : plan.assignment) {
    if (!by_id.contains(id)) throw Error("fold plan names unknown document " + id);
  }

  const std::size_t cells = plan.k * options.repeats;
  const std::size_t n_strategies = options.strategies.size();
  // counts[cell][strategy]
  std::vector<std::vector<EvalCounts>> counts(
      cells, std::vector<EvalCounts>(n_strategies));

  auto run_cell = [&](std::size_t cell) {
    const std::size_t fold = cell / options.repeats;
    const std::size_t run = cell % options.repeats;
    std::vector<const Document*> training;
    for (const auto& id : plan.training(fold)) training.push_back(by_id.at(id));
    for (const auto& id : plan.fold(fold)) {
      const Document& doc = *by_id.at(id);
      const auto rows = source(doc, training, run);
      for (std::size_t s = 0; s < n_strategies; ++s) {
        const auto preds = harmonise_document(rows, options.strategies[s]);
        counts[cell][s] +=
            score_document(preds, doc.annotations, similarity, options.pairing);
      }
    }
  };

  std::size_t threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, cells);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t cell = next++; cell < cells; cell = next++) {
          try {
            run_cell(cell);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mu);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<StrategyScore> table;
  for (std::size_t s = 0; s < n_strategies; ++s) {
    StrategyScore score;
    score.strategy = options.strategies[s];
    for (std::size_t cell = 0; cell < cells; ++cell) {
      score.f_per_cell.push_back(fscore(counts[cell][s]).f1);
      score.ser_per_cell.push_back(
          slot_error_rate(counts[cell][s], options.ser_denominator));
    }
    for (std::size_t cell = 0; cell < cells; ++cell) {
      score.mean_f += score.f_per_cell[cell];
      score.mean_ser += score.ser_per_cell[cell];
    }
    score.mean_f /= static_cast<double>(cells);
    score.mean_ser /= static_cast<double>(cells);
    table.push_back(std::move(score));
  }
  std::stable_sort(table.begin(), table.end(),
                   [](const StrategyScore& a, const StrategyScore& b) {
                     if (a.mean_f != b.mean_f) return a.mean_f > b.mean_f;
                     if (a.mean_ser != b.mean_ser) return a.mean_ser < b.mean_ser;
                     return a.strategy < b.strategy;
                   });
  return table;
}

StrategySelection select_strategy(std::span<const StrategyScore> table) {
  if (table.empty()) throw Error("cannot select from an empty table");
  const auto top = std::min_element(
      table.begin(), table.end(),
      [](const StrategyScore& a, const StrategyScore& b) {
        if (a.mean_f != b.mean_f) return a.mean_f > b.mean_f;
        if (a.mean_ser != b.mean_ser) return a.mean_ser < b.mean_ser;
        return a.strategy < b.strategy;
      });
  StrategySelection out;
  out.best = top->strategy;
  out.tied.push_back(top->strategy);
  for (const auto& row : table) {
    if (row.strategy != top->strategy && row.mean_f == top->mean_f) {
      out.tied.push_back(row.strategy);
    }
  }
  return out;
}

}  // namespace crtool
