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

#include "crtool/eval.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace crtool {

EvalCounts& EvalCounts::operator+=(const EvalCounts& other) {
  matches += other.matches;
  substitutions += other.substitutions;
  insertions += other.insertions;
  deletions += other.deletions;
  return *this;
}

std::string_view to_string(SerDenominator d) {
  switch (d) {
    case SerDenominator::kReference: return "reference";
    case SerDenominator::kAllSlots: return "all";
  }
  return "";
}

SerDenominator parse_ser_denominator(std::string_view name) {
  if (name == "reference") return SerDenominator::kReference;
  if (name == "all") return SerDenominator::kAllSlots;
  throw Error("unknown SER denominator '" + std::string(name) + "'");
}

double pair_similarity(const Annotation& pred, const Annotation& ref,
                       const ConceptSimilarity& similarity) {
  const double overlap = char_jaccard(pred.spans, ref.spans);
  if (overlap == 0.0) return 0.0;
  return overlap * similarity(pred.concept_id, ref.concept_id);
}

std::vector<Pairing> greedy_pairing(std::span<const Annotation> preds,
                                    std::span<const Annotation> refs,
                                    const ConceptSimilarity& similarity) {
  std::vector<Pairing> candidates;
  for (std::size_t p = 0; p < preds.size(); ++p) {
    for (std::size_t r = 0; r < refs.size(); ++r) {
      if (!spans_overlap(preds[p], refs[r])) continue;
      const double m = pair_similarity(preds[p], refs[r], similarity);
      if (m > 0.0) candidates.push_back({p, r, m});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [&](const Pairing& a, const Pairing& b) {
              if (a.similarity != b.similarity) {
                return a.similarity > b.similarity;
              }
              if (refs[a.ref].start() != refs[b.ref].start()) {
                return refs[a.ref].start() < refs[b.ref].start();
              }
              if (preds[a.pred].start() != preds[b.pred].start()) {
                return preds[a.pred].start() < preds[b.pred].start();
              }
              return std::pair(a.ref, a.pred) < std::pair(b.ref, b.pred);
            });

  std::vector<bool> pred_used(preds.size(), false);
  std::vector<bool> ref_used(refs.size(), false);
  std::vector<Pairing> chosen;
  for (const auto& c : candidates) {
    if (pred_used[c.pred] || ref_used[c.ref]) continue;
    pred_used[c.pred] = ref_used[c.ref] = true;
    chosen.push_back(c);
  }
  return chosen;
}

namespace {

// Small per-pair bonus so that, among pairings with equal total similarity,
// the one with more pairs wins.
constexpr double kPairBonus = 1e-9;

// Minimum-cost assignment of every row to a distinct column (rows <= cols).
// Returns the column chosen for each row.
std::vector<std::size_t> hungarian(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  const std::size_t m = cost.front().size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0), minv(m + 1);
  std::vector<std::size_t> owner(m + 1, 0), way(m + 1, 0);
  std::vector<bool> used(m + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    owner[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), false);
    do {
      used[j0] = true;
      const std::size_t i0 = owner[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[owner[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (owner[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      owner[j0] = owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> assignment(n, 0);
  for (std::size_t j = 1; j <= m; ++j) {
    if (owner[j] != 0) assignment[owner[j] - 1] = j - 1;
  }
  return assignment;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Pairing> optimal_pairing(std::span<const Annotation> preds,
                                     std::span<const Annotation> refs,
                                     const ConceptSimilarity& similarity) {
  std::vector<Pairing> edges;
  for (std::size_t p = 0; p < preds.size(); ++p) {
    for (std::size_t r = 0; r < refs.size(); ++r) {
      if (!spans_overlap(preds[p], refs[r])) continue;
      const double m = pair_similarity(preds[p], refs[r], similarity);
      if (m > 0.0) edges.push_back({p, r, m});
    }
  }
  // Nodes 0..P-1 are preds, P..P+R-1 refs.
  DisjointSets sets(preds.size() + refs.size());
  for (const auto& e : edges) sets.join(e.pred, preds.size() + e.ref);

  std::vector<Pairing> chosen;
  std::vector<bool> done(preds.size(), false);
  for (std::size_t root_pred = 0; root_pred < preds.size(); ++root_pred) {
    if (done[root_pred]) continue;
    const std::size_t root = sets.find(root_pred);
    std::vector<std::size_t> ps, rs;
    for (std::size_t p = 0; p < preds.size(); ++p) {
      if (sets.find(p) == root) {
        ps.push_back(p);
        done[p] = true;
      }
    }
    for (std::size_t r = 0; r < refs.size(); ++r) {
      if (sets.find(preds.size() + r) == root) rs.push_back(r);
    }
    if (rs.empty()) continue;

    const bool transpose = ps.size() > rs.size();
    const auto& rows = transpose ? rs : ps;
    const auto& cols = transpose ? ps : rs;
    std::vector<std::vector<double>> weight(rows.size(),
                                            std::vector<double>(cols.size()));
    for (const auto& e : edges) {
      if (sets.find(e.pred) != root) continue;
      const auto pi = static_cast<std::size_t>(
          std::find(ps.begin(), ps.end(), e.pred) - ps.begin());
      const auto ri = static_cast<std::size_t>(
          std::find(rs.begin(), rs.end(), e.ref) - rs.begin());
      if (transpose) {
        weight[ri][pi] = e.similarity;
      } else {
        weight[pi][ri] = e.similarity;
      }
    }
    std::vector<std::vector<double>> cost = weight;
    for (auto& row : cost) {
      for (auto& c : row) c = c > 0.0 ? -(c + kPairBonus) : 0.0;
    }
    const auto assignment = hungarian(cost);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double m = weight[i][assignment[i]];
      if (m <= 0.0) continue;
      const std::size_t p = transpose ? cols[assignment[i]] : rows[i];
      const std::size_t r = transpose ? rows[i] : cols[assignment[i]];
      chosen.push_back({p, r, m});
    }
  }
  std::sort(chosen.begin(), chosen.end(),
            [](const Pairing& a, const Pairing& b) { return a.pred < b.pred; });
  return chosen;
}

std::string_view to_string(PairingMethod m) {
  return m == PairingMethod::kOptimal ? "optimal" : "greedy";
}

PairingMethod parse_pairing_method(std::string_view name) {
  if (name == "optimal") return PairingMethod::kOptimal;
  if (name == "greedy") return PairingMethod::kGreedy;
  throw Error("unknown pairing method '" + std::string(name) + "'");
}

EvalCounts counts_from_pairing(std::span<const Pairing> pairs,
                               std::size_t pred_count, std::size_t ref_count) {
  EvalCounts c;
  for (const auto& p : pairs) {
    c.matches += p.similarity;
    c.substitutions += 1.0 - p.similarity;
  }
  c.insertions = static_cast<long>(pred_count - pairs.size());
  c.deletions = static_cast<long>(ref_count - pairs.size());
  return c;
}

EvalCounts score_document(std::span<const Annotation> preds,
                          std::span<const Annotation> refs,
                          const ConceptSimilarity& similarity,
                          PairingMethod method) {
  const auto pairs = method == PairingMethod::kOptimal
                         ? optimal_pairing(preds, refs, similarity)
                         : greedy_pairing(preds, refs, similarity);
  return counts_from_pairing(pairs, preds.size(), refs.size());
}

PRF fscore(const EvalCounts& c) {
  PRF out;
  const double pred_total = c.prediction_count();
  const double ref_total = c.reference_count();
  if (pred_total > 0) out.precision = c.matches / pred_total;
  if (ref_total > 0) out.recall = c.matches / ref_total;
  if (out.precision + out.recall > 0) {
    out.f1 = 2 * out.precision * out.recall / (out.precision + out.recall);
  }
  return out;
}

double slot_error_rate(const EvalCounts& c, SerDenominator denominator) {
  const double errors = c.substitutions + c.insertions + c.deletions;
  double slots = c.reference_count();
  if (denominator == SerDenominator::kAllSlots) slots += c.insertions;
  if (slots == 0) {
    return errors > 0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  return errors / slots;
}

std::pair<std::vector<Annotation>, std::vector<Annotation>> filter_unseen(
    std::span<const Annotation> preds, std::span<const Annotation> refs,
    const std::set<std::string, std::less<>>& train_labels) {
  auto keep = [&](std::span<const Annotation> in) {
    std::vector<Annotation> out;
    for (const auto& a : in) {
      if (!train_labels.contains(a.concept_id)) out.push_back(a);
    }
    return out;
  };
  return {keep(preds), keep(refs)};
}

std::string report_header() {
  return "set\tstrategy\tM\tS\tI\tD\tP\tR\tF\tSER";
}

std::string report_row(std::string_view set_name, std::string_view strategy,
                       const EvalCounts& c, SerDenominator denominator) {
  const PRF prf = fscore(c);
  const double ser = slot_error_rate(c, denominator);
  char buf[256];
  std::snprintf(buf, sizeof buf, "%.4f\t%.4f\t%ld\t%ld\t%.4f\t%.4f\t%.4f\t",
                c.matches, c.substitutions, c.insertions, c.deletions,
                prf.precision, prf.recall, prf.f1);
  std::string row = std::string(set_name) + '\t' + std::string(strategy) +
                    '\t' + buf;
  if (std::isinf(ser)) {
    row += "inf";
  } else {
    std::snprintf(buf, sizeof buf, "%.4f", ser);
    row += buf;
  }
  return row;
}

}  // namespace crtool
