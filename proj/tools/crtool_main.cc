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

// Command-line front end: format conversion, dictionary tagging,
// harmonisation, evaluation and strategy tuning.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "crtool/conll_convert.h"
#include "crtool/corpus_io.h"
#include "crtool/dict_tagger.h"
#include "crtool/eval.h"
#include "crtool/harmonise.h"
#include "crtool/lexicon.h"
#include "crtool/ontology.h"
#include "crtool/simplify.h"
#include "crtool/standoff_io.h"
#include "crtool/tuning.h"

namespace fs = std::filesystem;
using namespace crtool;

namespace {

std::optional<OntologyGraph> load_ontology(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return parse_obo(read_file(path));
}

TermIndex load_index(const std::string& ontology, const std::string& synonyms) {
  const OntologyGraph graph = parse_obo(read_file(ontology));
  std::vector<std::pair<std::string, std::string>> extra;
  if (!synonyms.empty()) extra = parse_synonyms(read_file(synonyms));
  return build_index(graph, extra);
}

std::set<std::string, std::less<>> load_labels(const std::string& path) {
  std::set<std::string, std::less<>> labels;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (!line.empty() && line.front() != '#') labels.insert(line);
  }
  return labels;
}

// Document text for an id from an optional directory of .txt files.
std::string text_for(const std::string& text_dir, const std::string& id) {
  if (text_dir.empty()) return {};
  const fs::path p = fs::path(text_dir) / (id + ".txt");
  return fs::exists(p) ? read_file(p) : std::string();
}

void write_annotations(const fs::path& out_dir, const std::string& id,
                       std::string text, std::vector<Annotation> anns) {
  Document doc{id, std::move(text), std::move(anns)};
  write_file(out_dir / (id + ".ann"), write_standoff(doc));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel concept recognition toolkit"};
  app.set_config("--config", "", "key=value file presetting any flag");
  app.require_subcommand(1);

  // convert
  std::string in_dir, out_dir, unify_name = "first-span",
                               unnest_name = "keep-longer";
  std::string ontology_path, synonyms_path;
  auto* convert = app.add_subcommand("convert", "stand-off -> CoNLL");
  convert->add_option("--input", in_dir, "directory of .txt/.ann")->required();
  convert->add_option("--output", out_dir, "directory for .conll")->required();
  convert->add_option("--unify", unify_name, "first-span|full-span|last-span");
  convert->add_option("--unnest", unnest_name, "keep-longer|keep-shorter");
  convert->add_option("--ontology", ontology_path,
                      "OBO file; fills the dictionary column");
  convert->add_option("--synonyms", synonyms_path, "extra term<TAB>CURIE file");

  // restore
  std::string text_dir, id_source_name = "id_tag", given_concept;
  auto* restore = app.add_subcommand("restore", "CoNLL -> stand-off");
  restore->add_option("--input", in_dir, "directory of .conll")->required();
  restore->add_option("--output", out_dir, "directory for .ann")->required();
  restore->add_option("--text", text_dir, "directory of matching .txt");
  restore->add_option("--id-source", id_source_name, "id_tag|dict|given");
  restore->add_option("--concept", given_concept, "concept for --id-source given");

  // roundtrip-eval
  std::string set_name = "-";
  double decay = kDefaultWangDecay;
  auto* roundtrip = app.add_subcommand(
      "roundtrip-eval", "upper bound of the CoNLL representation");
  roundtrip->add_option("--corpus", in_dir, "directory of .txt/.ann")->required();
  roundtrip->add_option("--ontology", ontology_path, "OBO file");
  auto* rt_unify = roundtrip->add_option("--unify", unify_name);
  auto* rt_unnest = roundtrip->add_option("--unnest", unnest_name);
  roundtrip->add_option("--set", set_name, "annotation set label");
  roundtrip->add_option("--decay", decay, "is-a decay factor");

  // dict-tag
  bool no_stopwords = false;
  auto* dict_tag = app.add_subcommand("dict-tag", "fill dictionary features");
  dict_tag->add_option("--ontology", ontology_path, "OBO file")->required();
  dict_tag->add_option("--synonyms", synonyms_path, "extra term<TAB>CURIE file");
  dict_tag->add_option("--input", in_dir, "directory of .conll")->required();
  dict_tag->add_option("--output", out_dir, "directory for .conll")->required();
  dict_tag->add_flag("--no-stopwords", no_stopwords,
                     "keep single-token closed-class matches");

  // harmonise
  std::string strategy_name;
  auto* harmonise = app.add_subcommand("harmonise", "merge prediction columns");
  harmonise->add_option("--strategy", strategy_name,
                        "spans-only|ids-only|spans-first|ids-first")
      ->required();
  harmonise->add_option("--input", in_dir, "directory of .conll")->required();
  harmonise->add_option("--output", out_dir, "directory for .ann")->required();
  harmonise->add_option("--text", text_dir, "directory of matching .txt");

  // evaluate
  std::string gold_dir, pred_dir, train_labels_path, ser_name = "reference",
                                                      pairing_name = "optimal";
  std::string strategy_label = "-";
  bool unseen_only = false, per_document = false;
  auto* evaluate = app.add_subcommand("evaluate", "score predictions");
  evaluate->add_option("--gold", gold_dir, "directory of .txt/.ann")->required();
  evaluate->add_option("--pred", pred_dir, "directory of predicted .ann")
      ->required();
  evaluate->add_option("--ontology", ontology_path, "OBO file");
  evaluate->add_option("--decay", decay, "is-a decay factor");
  auto* unseen_flag = evaluate->add_flag(
      "--unseen-only", unseen_only, "score only concepts unseen in training");
  evaluate->add_option("--train-labels", train_labels_path,
                       "file with one training CURIE per line")
      ->needs(unseen_flag);
  evaluate->add_option("--set", set_name, "annotation set label");
  evaluate->add_option("--strategy", strategy_label, "strategy label");
  evaluate->add_option("--ser-denominator", ser_name, "reference|all");
  evaluate->add_option("--pairing", pairing_name, "optimal|greedy");
  evaluate->add_flag("--per-document", per_document, "one row per document");

  // tune
  std::size_t folds = kDefaultFolds, repeats = 1, threads = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> strategy_names;
  bool use_baseline = false;
  auto* tune = app.add_subcommand("tune", "cross-validated strategy search");
  tune->add_option("--gold", gold_dir, "directory of .txt/.ann")->required();
  tune->add_option("--predictions", pred_dir,
                   "directory of .conll (or run1..runN subdirectories)");
  tune->add_flag("--baseline", use_baseline,
                 "use the lexicon baseline as prediction source");
  tune->add_option("--folds", folds, "fold count")->check(CLI::Range(2, 1000));
  tune->add_option("--repeats", repeats, "runs per fold")
      ->check(CLI::Range(1, 1000));
  tune->add_option("--seed", seed, "fold shuffle seed");
  tune->add_option("--strategies", strategy_names, "subset of strategies");
  tune->add_option("--ontology", ontology_path, "OBO file");
  tune->add_option("--synonyms", synonyms_path, "extra term<TAB>CURIE file");
  tune->add_option("--decay", decay, "is-a decay factor");
  tune->add_option("--threads", threads, "worker threads (0: all cores)");
  tune->add_option("--set", set_name, "annotation set label");
  tune->add_option("--pairing", pairing_name, "optimal|greedy");

  // baseline
  std::string model_path, labels_out;
  auto* baseline_train =
      app.add_subcommand("baseline-train", "train the lexicon baseline");
  baseline_train->add_option("--input", in_dir, "directory of gold .conll")
      ->required();
  baseline_train->add_option("--model", model_path, "output model file")
      ->required();
  baseline_train->add_option("--labels-out", labels_out,
                             "write the training label set here");
  auto* baseline_tag = app.add_subcommand("baseline-tag", "apply the baseline");
  baseline_tag->add_option("--model", model_path, "model file")->required();
  baseline_tag->add_option("--input", in_dir, "directory of .conll or .txt")
      ->required();
  baseline_tag->add_option("--output", out_dir, "directory for .conll")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*convert) {
      const auto u = parse_unify_strategy(unify_name);
      const auto n = parse_unnest_strategy(unnest_name);
      std::optional<TermIndex> index;
      if (!ontology_path.empty()) index = load_index(ontology_path, synonyms_path);
      for (const auto& doc : load_standoff_dir(in_dir)) {
        const auto tokens = tokenize(doc.text);
        auto rows = encode(simplify(doc, u, n), tokens);
        if (index) tag_sentences(rows, *index);
        write_file(fs::path(out_dir) / (doc.doc_id + ".conll"), write_conll(rows));
      }
    } else if (*restore) {
      const auto source = parse_id_source(id_source_name);
      for (const auto& [id, rows] : load_conll_dir(in_dir)) {
        write_annotations(out_dir, id, text_for(text_dir, id),
                          decode_iobes(rows, source, given_concept));
      }
    } else if (*roundtrip) {
      const auto ontology = load_ontology(ontology_path);
      const ConceptSimilarity sim(ontology ? &*ontology : nullptr, decay);
      const auto corpus = load_standoff_dir(in_dir);
      std::vector<std::pair<UnifyStrategy, UnnestStrategy>> combos;
      if (rt_unify->count() > 0 || rt_unnest->count() > 0) {
        combos.emplace_back(parse_unify_strategy(unify_name),
                            parse_unnest_strategy(unnest_name));
      } else {
        for (auto u : kAllUnifyStrategies) {
          for (auto n : kAllUnnestStrategies) combos.emplace_back(u, n);
        }
      }
      std::cout << report_header() << '\n';
      for (const auto& [u, n] : combos) {
        Warnings quiet;
        const auto counts = roundtrip_upper_bound(corpus, u, n, sim, &quiet);
        const std::string label =
            std::string(to_string(u)) + "/" + std::string(to_string(n));
        std::cout << report_row(set_name, label, counts) << '\n';
      }
    } else if (*dict_tag) {
      const TermIndex index = load_index(ontology_path, synonyms_path);
      TagOptions options;
      if (no_stopwords) options.stopwords.clear();
      for (auto& [id, rows] : load_conll_dir(in_dir)) {
        tag_sentences(rows, index, options);
        write_file(fs::path(out_dir) / (id + ".conll"), write_conll(rows));
      }
    } else if (*harmonise) {
      const auto strategy = parse_harmonisation_strategy(strategy_name);
      for (const auto& [id, rows] : load_conll_dir(in_dir)) {
        write_annotations(out_dir, id, text_for(text_dir, id),
                          harmonise_document(rows, strategy));
      }
    } else if (*evaluate) {
      const auto ontology = load_ontology(ontology_path);
      const ConceptSimilarity sim(ontology ? &*ontology : nullptr, decay);
      const auto ser = parse_ser_denominator(ser_name);
      const auto pairing = parse_pairing_method(pairing_name);
      std::set<std::string, std::less<>> train_labels;
      if (unseen_only) {
        if (train_labels_path.empty()) {
          throw Error("--unseen-only requires --train-labels");
        }
        train_labels = load_labels(train_labels_path);
      }
      std::cout << report_header() << '\n';
      EvalCounts total;
      for (const auto& gold : load_standoff_dir(gold_dir)) {
        const fs::path pred_file = fs::path(pred_dir) / (gold.doc_id + ".ann");
        if (!fs::exists(pred_file)) {
          throw Error("missing prediction file " + pred_file.string());
        }
        Document pred =
            parse_standoff(read_file(pred_file), gold.text, gold.doc_id);
        std::vector<Annotation> preds = pred.annotations;
        std::vector<Annotation> refs = gold.annotations;
        if (unseen_only) std::tie(preds, refs) = filter_unseen(preds, refs, train_labels);
        const auto counts = score_document(preds, refs, sim, pairing);
        if (per_document) {
          std::cout << report_row(gold.doc_id, strategy_label, counts, ser)
                    << '\n';
        }
        total += counts;
      }
      std::cout << report_row(set_name, strategy_label, total, ser) << '\n';
    } else if (*tune) {
      const auto ontology = load_ontology(ontology_path);
      const ConceptSimilarity sim(ontology ? &*ontology : nullptr, decay);
      const auto corpus = load_standoff_dir(gold_dir);
      std::vector<std::string> ids;
      for (const auto& d : corpus) ids.push_back(d.doc_id);
      const FoldPlan plan = make_folds(ids, folds, seed);

      std::optional<TermIndex> index;
      PredictionSource source;
      if (use_baseline == !pred_dir.empty()) {
        throw Error("tune needs exactly one of --predictions or --baseline");
      }
      if (use_baseline) {
        if (!ontology_path.empty()) index = load_index(ontology_path, synonyms_path);
        source = lexicon_predictions(index ? &*index : nullptr);
      } else {
        std::vector<std::map<std::string, std::vector<Sentence>>> runs;
        if (repeats == 1 && !fs::exists(fs::path(pred_dir) / "run1")) {
          runs.push_back(load_conll_dir(pred_dir));
        } else {
          for (std::size_t r = 1; r <= repeats; ++r) {
            runs.push_back(
                load_conll_dir(fs::path(pred_dir) / ("run" + std::to_string(r))));
          }
        }
        source = precomputed_predictions(std::move(runs));
      }
      GridSearchOptions options;
      options.repeats = repeats;
      options.threads = threads;
      options.pairing = parse_pairing_method(pairing_name);
      if (!strategy_names.empty()) {
        options.strategies.clear();
        for (const auto& s : strategy_names) {
          options.strategies.push_back(parse_harmonisation_strategy(s));
        }
      }
      const auto table = grid_search(corpus, source, plan, sim, options);
      std::cout << "set\tstrategy\tmean_F\tmean_SER\n";
      for (const auto& row : table) {
        std::printf("%s\t%s\t%.4f\t%.4f\n", set_name.c_str(),
                    std::string(to_string(row.strategy)).c_str(), row.mean_f,
                    row.mean_ser);
      }
      const auto pick = select_strategy(table);
      std::cout << "best\t" << to_string(pick.best);
      for (std::size_t i = 1; i < pick.tied.size(); ++i) {
        std::cout << "\ttied:" << to_string(pick.tied[i]);
      }
      std::cout << '\n';
    } else if (*baseline_train) {
      LexiconTagger lexicon;
      for (const auto& [id, rows] : load_conll_dir(in_dir)) lexicon.train(rows);
      write_file(model_path, lexicon.serialize());
      if (!labels_out.empty()) {
        std::string out;
        for (const auto& l : lexicon.labels()) out += l + '\n';
        write_file(labels_out, out);
      }
      std::cerr << "trained " << lexicon.size() << " entries\n";
    } else if (*baseline_tag) {
      const LexiconTagger lexicon =
          LexiconTagger::deserialize(read_file(model_path));
      auto docs = load_conll_dir(in_dir);
      if (docs.empty()) {
        for (const auto& id : list_ids(in_dir, ".txt")) {
          const Document blank{id, read_file(fs::path(in_dir) / (id + ".txt")), {}};
          docs[id] = encode(blank, tokenize(blank.text));
        }
      }
      for (auto& [id, rows] : docs) {
        lexicon.tag(rows);
        write_file(fs::path(out_dir) / (id + ".conll"), write_conll(rows));
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
