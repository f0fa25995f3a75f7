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

#ifndef CRTOOL_STANDOFF_IO_H_
#define CRTOOL_STANDOFF_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "crtool/diagnostics.h"
#include "crtool/model.h"

namespace crtool {

struct Token {
  std::string text;
  TextSpan span;

  bool operator==(const Token&) const = default;
};

// Maximal runs of word characters form one token; every other
// non-whitespace character is a token of its own. Spans are code-point
// offsets.
std::vector<Token> tokenize(std::string_view text);
std::vector<Token> tokenize(std::u32string_view text);

// Text covered by an annotation, fragments joined by " ... ".
std::string covered_text(std::u32string_view text, const Annotation& ann);

// Brat-style stand-off: "T1<TAB>CURIE start end[;start end]*<TAB>text".
// Blank lines and '#' comments are skipped; other record types (N, A, R...)
// are skipped with a warning.
Document parse_standoff(std::string_view ann_text, std::string_view doc_text,
                        std::string doc_id = {}, Warnings* warnings = nullptr);
// Record text is taken from doc.text, or from each annotation's own text
// when the document text is empty.
std::string write_standoff(const Document& doc);

// Six tab-separated columns: token, start, end, span tag, id tag,
// dictionary features (';'-joined, '-' when empty). A blank line ends a
// sentence.
std::vector<Sentence> parse_conll(std::string_view text);
std::string write_conll(const std::vector<Sentence>& sentences);

}  // namespace crtool

#endif  // CRTOOL_STANDOFF_IO_H_
