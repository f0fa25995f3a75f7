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

#include "crtool/model.h"

#include <algorithm>

namespace crtool {

TextSpan::TextSpan(std::size_t start, std::size_t end)
    : start(start), end(end) {
  if (start >= end) {
    throw Error("invalid span (" + std::to_string(start) + "," +
                std::to_string(end) + "): start must be below end");
  }
}

Annotation::Annotation(std::string concept_id, std::vector<TextSpan> spans,
                       std::string text)
    : concept_id(std::move(concept_id)),
      spans(std::move(spans)),
      text(std::move(text)) {
  validate();
}

void Annotation::validate() const {
  if (spans.empty()) throw Error("annotation " + concept_id + " has no spans");
  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (spans[i].start >= spans[i].end) {
      throw Error("annotation " + concept_id + " has an empty span");
    }
    if (i > 0 && spans[i - 1].end > spans[i].start) {
      throw Error("annotation " + concept_id +
                  " has unsorted or overlapping spans");
    }
  }
}

std::size_t Annotation::char_count() const {
  std::size_t n = 0;
  for (const auto& s : spans) n += s.length();
  return n;
}

char to_char(SpanTag tag) {
  switch (tag) {
    case SpanTag::B: return 'B';
    case SpanTag::I: return 'I';
    case SpanTag::E: return 'E';
    case SpanTag::S: return 'S';
    case SpanTag::O: return 'O';
  }
  return 'O';
}

SpanTag span_tag_from_string(std::string_view s) {
  if (s.size() == 1) {
    switch (s[0]) {
      case 'B': return SpanTag::B;
      case 'I': return SpanTag::I;
      case 'E': return SpanTag::E;
      case 'S': return SpanTag::S;
      case 'O': return SpanTag::O;
      default: break;
    }
  }
  throw Error("unknown span tag '" + std::string(s) + "'");
}

IdTag::IdTag(std::string curie) : curie_(std::move(curie)) {
  if (curie_ == kNilText) curie_.clear();
}

IdTag IdTag::parse(std::string_view s) { return IdTag(std::string(s)); }

std::vector<TextSpan> normalize_spans(std::span<const TextSpan> spans) {
  std::vector<TextSpan> sorted(spans.begin(), spans.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<TextSpan> merged;
  for (const auto& s : sorted) {
    if (!merged.empty() && s.start <= merged.back().end) {
      merged.back().end = std::max(merged.back().end, s.end);
    } else {
      merged.push_back(s);
    }
  }
  return merged;
}

namespace {

std::size_t covered(const std::vector<TextSpan>& merged) {
  std::size_t n = 0;
  for (const auto& s : merged) n += s.length();
  return n;
}

}  // namespace

double char_jaccard(std::span<const TextSpan> a, std::span<const TextSpan> b) {
  const auto ma = normalize_spans(a);
  const auto mb = normalize_spans(b);
  std::size_t inter = 0;
  std::size_t i = 0, j = 0;
  while (i < ma.size() && j < mb.size()) {
    const std::size_t lo = std::max(ma[i].start, mb[j].start);
    const std::size_t hi = std::min(ma[i].end, mb[j].end);
    if (lo < hi) inter += hi - lo;
    if (ma[i].end < mb[j].end) {
      ++i;
    } else {
      ++j;
    }
  }
  const std::size_t uni = covered(ma) + covered(mb) - inter;
  if (uni == 0) return 0.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

bool spans_overlap(const Annotation& a, const Annotation& b) {
  for (const auto& x : a.spans) {
    for (const auto& y : b.spans) {
      if (x.overlaps(y)) return true;
    }
  }
  return false;
}

}  // namespace crtool
