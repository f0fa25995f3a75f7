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

#include "crtool/simplify.h"

#include <algorithm>

#include "crtool/unicode.h"

namespace crtool {

std::string_view to_string(UnifyStrategy s) {
  switch (s) {
    case UnifyStrategy::kFirstSpan: return "first-span";
    case UnifyStrategy::kFullSpan: return "full-span";
    case UnifyStrategy::kLastSpan: return "last-span";
  }
  return "";
}

std::string_view to_string(UnnestStrategy s) {
  switch (s) {
    case UnnestStrategy::kKeepLonger: return "keep-longer";
    case UnnestStrategy::kKeepShorter: return "keep-shorter";
  }
  return "";
}

UnifyStrategy parse_unify_strategy(std::string_view name) {
  for (auto s : kAllUnifyStrategies) {
    if (to_string(s) == name) return s;
  }
  throw Error("unknown unification strategy '" + std::string(name) + "'");
}

UnnestStrategy parse_unnest_strategy(std::string_view name) {
  for (auto s : kAllUnnestStrategies) {
    if (to_string(s) == name) return s;
  }
  throw Error("unknown unnesting strategy '" + std::string(name) + "'");
}

Annotation unify(const Annotation& ann, UnifyStrategy strategy) {
  if (!ann.discontinuous()) return ann;
  Annotation out = ann;
  switch (strategy) {
    case UnifyStrategy::kFirstSpan:
      out.spans = {ann.spans.front()};
      break;
    case UnifyStrategy::kLastSpan:
      out.spans = {ann.spans.back()};
      break;
    case UnifyStrategy::kFullSpan:
      out.spans = {TextSpan(ann.start(), ann.end())};
      break;
  }
  out.text.clear();
  return out;
}

namespace {

// True if candidate wins against an overlapping survivor.
bool beats(const Annotation& candidate, const Annotation& survivor,
           UnnestStrategy strategy) {
  const std::size_t lc = candidate.char_count();
  const std::size_t ls = survivor.char_count();
  if (lc != ls) {
    return strategy == UnnestStrategy::kKeepLonger ? lc > ls : lc < ls;
  }
  if (candidate.start() != survivor.start()) {
    return candidate.start() < survivor.start();
  }
  return candidate.concept_id < survivor.concept_id;
}

}  // namespace

Document unnest(const Document& doc, UnnestStrategy strategy) {
  std::vector<Annotation> order = doc.annotations;
  for (const auto& a : order) {
    if (a.discontinuous()) {
      throw Error("unnest requires unified annotations (" + a.concept_id + ")");
    }
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const Annotation& a, const Annotation& b) {
                     if (a.start() != b.start()) return a.start() < b.start();
                     if (a.end() != b.end()) return a.end() > b.end();
                     return a.concept_id < b.concept_id;
                   });

  std::vector<Annotation> survivors;
  for (auto& candidate : order) {
    bool wins = true;
    std::vector<std::size_t> beaten;
    for (std::size_t i = 0; i < survivors.size(); ++i) {
      if (!spans_overlap(candidate, survivors[i])) continue;
      if (beats(candidate, survivors[i], strategy)) {
        beaten.push_back(i);
      } else {
        wins = false;
        break;
      }
    }
    if (!wins) continue;
    for (auto it = beaten.rbegin(); it != beaten.rend(); ++it) {
      survivors.erase(survivors.begin() + static_cast<std::ptrdiff_t>(*it));
    }
    survivors.push_back(std::move(candidate));
  }
  std::sort(survivors.begin(), survivors.end());

  Document out = doc;
  out.annotations = std::move(survivors);
  return out;
}

Document extend_subword(const Document& doc, std::span<const Token> tokens,
                        Warnings* warnings) {
  Document out = doc;
  out.annotations.clear();
  for (const auto& ann : doc.annotations) {
    std::vector<TextSpan> snapped;
    for (const auto& span : ann.spans) {
      auto first = std::lower_bound(
          tokens.begin(), tokens.end(), span.start,
          [](const Token& t, std::size_t pos) { return t.span.end <= pos; });
      if (first == tokens.end() || first->span.start >= span.end) continue;
      auto last = first;
      while (std::next(last) != tokens.end() &&
             std::next(last)->span.start < span.end) {
        ++last;
      }
      snapped.emplace_back(first->span.start, last->span.end);
    }
    if (snapped.empty()) {
      warn(warnings, doc.doc_id + ": dropping annotation " + ann.concept_id +
                         " that covers no token");
      continue;
    }
    Annotation a = ann;
    a.spans = normalize_spans(snapped);
    if (a.spans != ann.spans) a.text.clear();
    out.annotations.push_back(std::move(a));
  }
  return out;
}

Document simplify(const Document& doc, UnifyStrategy unify_strategy,
                  UnnestStrategy unnest_strategy, Warnings* warnings) {
  Document unified = doc;
  for (auto& ann : unified.annotations) ann = unify(ann, unify_strategy);
  const auto text = to_code_points(doc.text);
  const auto tokens = tokenize(std::u32string_view(text));
  Document result = unnest(extend_subword(unified, tokens, warnings),
                           unnest_strategy);
  for (auto& ann : result.annotations) {
    if (ann.text.empty()) ann.text = covered_text(text, ann);
  }
  return result;
}

}  // namespace crtool
