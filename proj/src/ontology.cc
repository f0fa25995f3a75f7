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

#include "crtool/ontology.h"

#include <algorithm>
#include <deque>
#include <mutex>

#include "crtool/model.h"
#include "text_util.h"

namespace crtool {

OntologyGraph::OntologyGraph(std::vector<Concept> concepts)
    : concepts_(std::move(concepts)) {
  index_.reserve(concepts_.size());
  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    if (!index_.emplace(concepts_[i].id, i).second) {
      throw Error("duplicate concept id " + concepts_[i].id);
    }
  }
  parents_.resize(concepts_.size());
  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    for (const auto& p : concepts_[i].parents) {
      auto it = index_.find(p);
      if (it == index_.end()) {
        throw Error("concept " + concepts_[i].id + " has unknown parent " + p);
      }
      parents_[i].push_back(it->second);
    }
  }

  // Kahn's algorithm over child -> parent edges.
  std::vector<std::size_t> pending_children(concepts_.size(), 0);
  for (const auto& ps : parents_) {
    for (auto p : ps) ++pending_children[p];
  }
  std::deque<std::size_t> ready;
  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    if (pending_children[i] == 0) ready.push_back(i);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    const std::size_t n = ready.front();
    ready.pop_front();
    ++visited;
    for (auto p : parents_[n]) {
      if (--pending_children[p] == 0) ready.push_back(p);
    }
  }
  if (visited != concepts_.size()) {
    for (std::size_t i = 0; i < concepts_.size(); ++i) {
      if (pending_children[i] != 0) {
        throw Error("is_a cycle detected involving " + concepts_[i].id);
      }
    }
  }
}

bool OntologyGraph::contains(std::string_view id) const {
  return index_.find(std::string(id)) != index_.end();
}

std::size_t OntologyGraph::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw Error("unknown concept " + std::string(id));
  return it->second;
}

const Concept& OntologyGraph::get(std::string_view id) const {
  return concepts_[index_of(id)];
}

std::set<std::string> OntologyGraph::ancestors(std::string_view id) const {
  std::set<std::string> out;
  std::vector<std::size_t> stack{index_of(id)};
  while (!stack.empty()) {
    const std::size_t n = stack.back();
    stack.pop_back();
    if (!out.insert(concepts_[n].id).second) continue;
    for (auto p : parents_[n]) stack.push_back(p);
  }
  return out;
}

namespace {

std::string_view strip_comment(std::string_view value) {
  const std::size_t bang = value.find(" !");
  if (bang != std::string_view::npos) value = value.substr(0, bang);
  const std::size_t brace = value.find(" {");
  if (brace != std::string_view::npos) value = value.substr(0, brace);
  return internal::trim(value);
}

// First double-quoted string of an OBO synonym value, with \" unescaped.
std::string quoted(std::string_view value) {
  const std::size_t open = value.find('"');
  if (open == std::string_view::npos) return {};
  std::string out;
  for (std::size_t i = open + 1; i < value.size(); ++i) {
    if (value[i] == '\\' && i + 1 < value.size()) {
      out.push_back(value[++i]);
    } else if (value[i] == '"') {
      return out;
    } else {
      out.push_back(value[i]);
    }
  }
  return out;
}

}  // namespace

OntologyGraph parse_obo(std::string_view text, Warnings* warnings) {
  std::vector<Concept> concepts;
  bool in_term = false;
  for (auto line : internal::lines(text)) {
    line = internal::trim(line);
    if (line.empty() || line.front() == '!') continue;
    if (line.front() == '[') {
      in_term = line == "[Term]";
      if (in_term) concepts.emplace_back();
      continue;
    }
    if (!in_term) continue;
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) continue;
    const std::string_view key = line.substr(0, colon);
    const std::string_view value = internal::trim(line.substr(colon + 1));
    Concept& c = concepts.back();
    if (key == "id") {
      c.id = std::string(strip_comment(value));
    } else if (key == "name") {
      c.name = std::string(value);
    } else if (key == "synonym") {
      std::string syn = quoted(value);
      if (!syn.empty()) c.synonyms.push_back(std::move(syn));
    } else if (key == "is_a") {
      c.parents.emplace_back(strip_comment(value));
    } else if (key == "is_obsolete") {
      c.obsolete = value == "true";
    }
  }

  std::erase_if(concepts, [&](const Concept& c) {
    if (c.id.empty()) warn(warnings, "skipping [Term] stanza without id");
    return c.id.empty();
  });
  std::unordered_set<std::string> ids;
  for (const auto& c : concepts) ids.insert(c.id);
  for (auto& c : concepts) {
    std::erase_if(c.parents, [&](const std::string& p) {
      if (ids.count(p)) return false;
      warn(warnings, "dropping dangling is_a " + c.id + " -> " + p);
      return true;
    });
    std::sort(c.parents.begin(), c.parents.end());
    c.parents.erase(std::unique(c.parents.begin(), c.parents.end()),
                    c.parents.end());
  }
  return OntologyGraph(std::move(concepts));
}

std::unordered_map<std::size_t, double> semantic_values(
    const OntologyGraph& graph, std::string_view id, double decay) {
  // With a uniform edge weight the best path to an ancestor is the shortest
  // one, so breadth-first order assigns each ancestor its final value.
  std::unordered_map<std::size_t, double> values;
  std::deque<std::size_t> queue;
  const std::size_t root = graph.index_of(id);
  values.emplace(root, 1.0);
  queue.push_back(root);
  while (!queue.empty()) {
    const std::size_t n = queue.front();
    queue.pop_front();
    const double next = values[n] * decay;
    for (auto p : graph.parent_indices(n)) {
      if (values.emplace(p, next).second) queue.push_back(p);
    }
  }
  return values;
}

namespace {

void check_decay(double decay) {
  if (!(decay > 0.0 && decay < 1.0)) {
    throw Error("similarity decay must lie in (0, 1)");
  }
}

double combine(const std::unordered_map<std::size_t, double>& va, double ta,
               const std::unordered_map<std::size_t, double>& vb, double tb) {
  // Summed in term order so that the result is exactly symmetric.
  std::vector<std::size_t> common;
  for (const auto& [t, s] : va) {
    if (vb.contains(t)) common.push_back(t);
  }
  std::sort(common.begin(), common.end());
  double shared = 0.0;
  for (std::size_t t : common) shared += va.at(t) + vb.at(t);
  return shared / (ta + tb);
}

double total(const std::unordered_map<std::size_t, double>& v) {
  double sum = 0.0;
  for (const auto& [t, s] : v) sum += s;
  return sum;
}

}  // namespace

double wang_similarity(const OntologyGraph& graph, std::string_view a,
                       std::string_view b, double decay) {
  check_decay(decay);
  const auto va = semantic_values(graph, a, decay);
  const auto vb = semantic_values(graph, b, decay);
  if (a == b) return 1.0;
  return combine(va, total(va), vb, total(vb));
}

ConceptSimilarity::ConceptSimilarity(const OntologyGraph* graph, double decay,
                                     Warnings* warnings)
    : graph_(graph), decay_(decay), warnings_(warnings) {
  check_decay(decay);
}

std::shared_ptr<const ConceptSimilarity::Profile> ConceptSimilarity::profile(
    std::string_view id) const {
  const std::string key(id);
  {
    std::shared_lock lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  std::shared_ptr<const Profile> result;
  if (graph_ != nullptr && graph_->contains(id)) {
    auto p = std::make_shared<Profile>();
    p->values = semantic_values(*graph_, id, decay_);
    p->total = total(p->values);
    result = std::move(p);
  }
  std::unique_lock lock(mu_);
  if (!result && graph_ != nullptr && warned_.insert(key).second) {
    warn(warnings_, "concept " + key + " not found in ontology; scoring 0");
  }
  return cache_.emplace(key, result).first->second;
}

double ConceptSimilarity::operator()(std::string_view a,
                                     std::string_view b) const {
  if (a == b) return 1.0;
  if (graph_ == nullptr) return 0.0;
  const auto pa = profile(a);
  const auto pb = profile(b);
  if (!pa || !pb) return 0.0;
  return combine(pa->values, pa->total, pb->values, pb->total);
}

}  // namespace crtool
