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

#ifndef CRTOOL_MODEL_H_
#define CRTOOL_MODEL_H_

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crtool {

// Raised for malformed input files and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Half-open range [start, end) of Unicode scalar values in a document text.
struct TextSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  TextSpan() = default;
  TextSpan(std::size_t start, std::size_t end);

  std::size_t length() const { return end - start; }
  bool overlaps(const TextSpan& other) const {
    return start < other.end && other.start < end;
  }
  bool contains(std::size_t pos) const { return start <= pos && pos < end; }

  auto operator<=>(const TextSpan&) const = default;
};

// One concept mention. Several spans mark a discontinuous mention.
struct Annotation {
  std::string concept_id;
  std::vector<TextSpan> spans;
  // Covered text, informative only; offsets are authoritative.
  std::string text;

  Annotation() = default;
  Annotation(std::string concept_id, std::vector<TextSpan> spans,
             std::string text = {});

  // Throws Error unless spans are non-empty, sorted and non-overlapping.
  void validate() const;

  bool discontinuous() const { return spans.size() > 1; }
  std::size_t start() const { return spans.front().start; }
  std::size_t end() const { return spans.back().end; }
  // Number of covered characters.
  std::size_t char_count() const;

  // Identity is (spans, concept_id); the text field is ignored.
  bool operator==(const Annotation& other) const {
    return spans == other.spans && concept_id == other.concept_id;
  }
  std::strong_ordering operator<=>(const Annotation& other) const {
    if (auto c = spans <=> other.spans; c != 0) return c;
    return concept_id <=> other.concept_id;
  }
};

struct Document {
  std::string doc_id;
  std::string text;  // UTF-8
  std::vector<Annotation> annotations;
};

enum class SpanTag { B, I, E, S, O };

char to_char(SpanTag tag);
SpanTag span_tag_from_string(std::string_view s);
inline bool is_relevant(SpanTag tag) { return tag != SpanTag::O; }

// A concept CURIE or NIL. NIL is stored as the empty string, which no valid
// CURIE can be.
class IdTag {
 public:
  static constexpr std::string_view kNilText = "NIL";

  IdTag() = default;
  explicit IdTag(std::string curie);
  static IdTag nil() { return IdTag(); }
  // "NIL" parses to nil; anything else is taken as a CURIE.
  static IdTag parse(std::string_view s);

  bool is_nil() const { return curie_.empty(); }
  const std::string& curie() const { return curie_; }
  std::string to_string() const {
    return is_nil() ? std::string(kNilText) : curie_;
  }

  auto operator<=>(const IdTag&) const = default;

 private:
  std::string curie_;
};

struct ConllRow {
  std::string token;
  TextSpan span;
  SpanTag span_tag = SpanTag::O;
  IdTag id_tag;
  // Sorted, deduplicated concept CURIEs from the dictionary tagger.
  std::vector<std::string> dict_features;

  bool operator==(const ConllRow&) const = default;
};

using Sentence = std::vector<ConllRow>;

// Merges fragments into sorted, disjoint, non-adjacent intervals.
std::vector<TextSpan> normalize_spans(std::span<const TextSpan> spans);

// Jaccard index over the covered character sets of a and b.
double char_jaccard(std::span<const TextSpan> a, std::span<const TextSpan> b);

// True iff any fragment of a shares a character with any fragment of b.
bool spans_overlap(const Annotation& a, const Annotation& b);

}  // namespace crtool

#endif  // CRTOOL_MODEL_H_
