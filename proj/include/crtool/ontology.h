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

#ifndef CRTOOL_ONTOLOGY_H_
#define CRTOOL_ONTOLOGY_H_

#include <memory>
#include <set>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "crtool/diagnostics.h"

namespace crtool {

struct Concept {
  std::string id;
  std::string name;
  std::vector<std::string> synonyms;
  std::vector<std::string> parents;  // is_a targets
  bool obsolete = false;
};

// Immutable is-a DAG over ontology concepts.
class OntologyGraph {
 public:
  OntologyGraph() = default;
  // Throws Error on duplicate ids, unknown parents or cycles.
  explicit OntologyGraph(std::vector<Concept> concepts);

  std::size_t size() const { return concepts_.size(); }
  bool contains(std::string_view id) const;
  // Throws Error for unknown ids.
  const Concept& get(std::string_view id) const;
  const std::vector<Concept>& concepts() const { return concepts_; }

  // Reflexive-transitive closure over is_a. Throws Error for unknown ids.
  std::set<std::string> ancestors(std::string_view id) const;

  // Index-level access used by the similarity code.
  std::size_t index_of(std::string_view id) const;
  const std::vector<std::size_t>& parent_indices(std::size_t i) const {
    return parents_[i];
  }

 private:
  std::vector<Concept> concepts_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> parents_;
};

// OBO flat file, [Term] stanzas only; keys id, name, synonym, is_a,
// is_obsolete. Dangling is_a edges are dropped with a warning; cycles throw.
OntologyGraph parse_obo(std::string_view text, Warnings* warnings = nullptr);

inline constexpr double kDefaultWangDecay = 0.8;

// Semantic value of every ancestor t of id: S(id) = 1, S(t) = max over
// children c of t on a path from id of decay * S(c).
std::unordered_map<std::size_t, double> semantic_values(
    const OntologyGraph& graph, std::string_view id, double decay);

// Shared-ancestor similarity with multiplicative is-a decay. Throws Error
// for unknown ids or decay outside (0, 1).
double wang_similarity(const OntologyGraph& graph, std::string_view a,
                       std::string_view b, double decay = kDefaultWangDecay);

// Concept similarity used by the evaluator: identical ids score 1 even when
// absent from the ontology; otherwise unknown ids score 0 (warned once per
// id). Semantic values are cached; safe for concurrent use.
class ConceptSimilarity {
 public:
  // A null graph scores exact id equality only.
  explicit ConceptSimilarity(const OntologyGraph* graph = nullptr,
                             double decay = kDefaultWangDecay,
                             Warnings* warnings = nullptr);

  double operator()(std::string_view a, std::string_view b) const;
  const OntologyGraph* graph() const { return graph_; }

 private:
  struct Profile {
    std::unordered_map<std::size_t, double> values;
    double total = 0.0;
  };
  std::shared_ptr<const Profile> profile(std::string_view id) const;

  const OntologyGraph* graph_;
  double decay_;
  Warnings* warnings_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<std::string, std::shared_ptr<const Profile>>
      cache_;
  mutable std::unordered_set<std::string> warned_;
};

}  // namespace crtool

#endif  // CRTOOL_ONTOLOGY_H_
