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

#include <thread>

#include "crtool/ontology.h"
#include "test_support.h"

namespace crtool {
namespace {

using testing::Rng;

const char* kChainObo = R"([Term]
id: GO:3
name: root process

[Term]
id: GO:2
name: middle process
synonym: "mid \"quoted\" process" EXACT []
is_a: GO:3 ! root process

[Term]
id: GO:1
name: leaf process
is_a: GO:2 {source="x"} ! middle process

[Typedef]
id: part_of
name: part of
)";

Concept make(std::string id, std::vector<std::string> parents = {}) {
  Concept c;
  c.id = std::move(id);
  c.name = c.id;
  c.parents = std::move(parents);
  return c;
}

// Linear chain n0 -> n1 -> ... -> n{len-1} (root).
OntologyGraph chain(std::size_t len) {
  std::vector<Concept> cs;
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::string> parents;
    if (i + 1 < len) parents.push_back("N:" + std::to_string(i + 1));
    cs.push_back(make("N:" + std::to_string(i), parents));
  }
  return OntologyGraph(std::move(cs));
}

// Random DAG: each node may point to any earlier node.
OntologyGraph random_dag(Rng& rng, std::size_t n) {
  std::vector<Concept> cs;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> parents;
    for (std::size_t j = 0; j < i; ++j) {
      if (testing::coin(rng, 0.25)) parents.push_back("N:" + std::to_string(j));
    }
    cs.push_back(make("N:" + std::to_string(i), parents));
  }
  return OntologyGraph(std::move(cs));
}

TEST_CASE("parse_obo") {
  Warnings w;
  const OntologyGraph g = parse_obo(kChainObo, &w);
  CHECK(w.size() == 0);
  CHECK(g.size() == 3);
  CHECK(g.get("GO:2").name == "middle process");
  CHECK(g.get("GO:2").synonyms ==
        std::vector<std::string>{"mid \"quoted\" process"});
  CHECK(g.get("GO:1").parents == std::vector<std::string>{"GO:2"});
  CHECK_FALSE(g.contains("part_of"));
  CHECK(g.ancestors("GO:1") == std::set<std::string>{"GO:1", "GO:2", "GO:3"});
  CHECK(g.ancestors("GO:3") == std::set<std::string>{"GO:3"});
  CHECK_THROWS_AS(g.get("GO:9"), Error);
}

TEST_CASE("parse_obo obsolete and dangling edges") {
  Warnings w;
  const OntologyGraph g = parse_obo(
      "[Term]\nid: X:1\nname: one\nis_a: X:404\nis_obsolete: true\n", &w);
  CHECK(w.size() == 1);
  CHECK(g.get("X:1").obsolete);
  CHECK(g.get("X:1").parents.empty());
}

TEST_CASE("cycles and duplicates are rejected") {
  CHECK_THROWS_AS(parse_obo("[Term]\nid: A:1\nis_a: A:2\n\n[Term]\nid: A:2\nis_a: A:1\n"),
                  Error);
  CHECK_THROWS_AS(OntologyGraph({make("A:1", {"A:1"})}), Error);
  CHECK_THROWS_AS(OntologyGraph({make("A:1"), make("A:1")}), Error);
  CHECK_THROWS_AS(OntologyGraph({make("A:1", {"A:9"})}), Error);
}

TEST_CASE("ancestors of a diamond") {
  const OntologyGraph g({make("D:top"), make("D:l", {"D:top"}),
                         make("D:r", {"D:top"}), make("D:bot", {"D:l", "D:r"})});
  CHECK(g.ancestors("D:bot") ==
        std::set<std::string>{"D:bot", "D:l", "D:r", "D:top"});
  const auto sv = semantic_values(g, "D:bot", 0.8);
  CHECK(sv.at(g.index_of("D:top")) == doctest::Approx(0.64));
}

TEST_CASE("wang similarity on a three-node chain") {
  const OntologyGraph g = parse_obo(kChainObo);
  const double expected = 3.24 / 4.24;
  CHECK(std::abs(wang_similarity(g, "GO:1", "GO:2") - expected) < 1e-9);
  CHECK(std::abs(testing::wang_oracle(g, "GO:1", "GO:2", 0.8) - expected) < 1e-9);
  CHECK(std::abs(wang_similarity(g, "GO:1", "GO:2") - 0.7642) < 1e-4);
  CHECK(wang_similarity(g, "GO:1", "GO:1") == 1.0);
  CHECK_THROWS_AS(wang_similarity(g, "GO:1", "GO:404"), Error);
  CHECK_THROWS_AS(wang_similarity(g, "GO:1", "GO:2", 1.0), Error);
  CHECK_THROWS_AS(wang_similarity(g, "GO:1", "GO:2", 0.0), Error);
}

TEST_CASE("wang similarity decays strictly along a chain") {
  const OntologyGraph g = chain(10);
  double previous = 1.0;
  for (std::size_t i = 1; i < 10; ++i) {
    const double s = wang_similarity(g, "N:0", "N:" + std::to_string(i));
    CHECK(s < previous);
    CHECK(s > 0.0);
    previous = s;
  }
}

TEST_CASE("disjoint roots score zero") {
  const OntologyGraph g({make("A:1"), make("A:2", {"A:1"}), make("B:1"),
                         make("B:2", {"B:1"})});
  CHECK(wang_similarity(g, "A:2", "B:2") == 0.0);
  CHECK(wang_similarity(g, "A:1", "B:1") == 0.0);
}

TEST_CASE("wang similarity matches the path-enumeration oracle") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const OntologyGraph g = random_dag(rng, testing::uniform(rng, 1, 9));
    const double decay = 0.1 + 0.8 * testing::uniform(rng, 0, 100) / 100.0;
    for (const auto& a : g.concepts()) {
      for (const auto& b : g.concepts()) {
        const double s = wang_similarity(g, a.id, b.id, decay);
        CHECK(std::abs(s - testing::wang_oracle(g, a.id, b.id, decay)) < 1e-12);
        CHECK(s == wang_similarity(g, b.id, a.id, decay));
        CHECK(s >= 0.0);
        CHECK(s <= 1.0);
        if (a.id == b.id) CHECK(s == 1.0);
      }
      // The closure is monotone: a parent's ancestors are a subset.
      const auto anc = g.ancestors(a.id);
      for (const auto& p : a.parents) {
        for (const auto& t : g.ancestors(p)) CHECK(anc.count(t) == 1);
      }
    }
  }
}

TEST_CASE("ConceptSimilarity") {
  const OntologyGraph g = parse_obo(kChainObo);
  Warnings w;
  const ConceptSimilarity sim(&g, 0.8, &w);
  CHECK(sim("GO:1", "GO:2") == doctest::Approx(3.24 / 4.24).epsilon(1e-12));
  CHECK(sim("CL:404", "CL:404") == 1.0);
  CHECK(sim("GO:1", "CL:404") == 0.0);
  CHECK(sim("CL:404", "GO:2") == 0.0);
  CHECK(w.size() == 1);

  const ConceptSimilarity exact;
  CHECK(exact("GO:1", "GO:1") == 1.0);
  CHECK(exact("GO:1", "GO:2") == 0.0);
}

TEST_CASE("ConceptSimilarity is safe to share across threads") {
  const OntologyGraph g = chain(30);
  const ConceptSimilarity sim(&g);
  std::vector<double> results(8);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < results.size(); ++t) {
      pool.emplace_back([&, t] {
        double total = 0;
        for (int i = 0; i < 30; ++i) {
          for (int j = 0; j < 30; ++j) {
            total += sim("N:" + std::to_string(i), "N:" + std::to_string(j));
          }
        }
        results[t] = total;
      });
    }
  }
  for (double r : results) CHECK(r == results.front());
}

}  // namespace
}  // namespace crtool
