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

#include "crtool/standoff_io.h"

#include <set>
#include <sstream>

#include "crtool/unicode.h"
#include "text_util.h"

namespace crtool {

using internal::lines;
using internal::parse_size;
using internal::split;

std::vector<Token> tokenize(std::u32string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    if (is_word_char(text[i])) {
      while (j < text.size() && is_word_char(text[j])) ++j;
    }
    tokens.push_back({to_utf8(text.substr(i, j - i)), TextSpan(i, j)});
    i = j;
  }
  return tokens;
}

std::vector<Token> tokenize(std::string_view text) {
  return tokenize(to_code_points(text));
}

std::string covered_text(std::u32string_view text, const Annotation& ann) {
  std::string out;
  for (std::size_t i = 0; i < ann.spans.size(); ++i) {
    const auto& s = ann.spans[i];
    if (i > 0) out += " ... ";
    if (s.end <= text.size()) out += to_utf8(text.substr(s.start, s.length()));
  }
  return out;
}

namespace {

std::string line_error(std::size_t line_no, const std::string& what) {
  return "line " + std::to_string(line_no) + ": " + what;
}

std::vector<TextSpan> parse_fragments(std::string_view s, std::size_t line_no,
                                      std::size_t text_length) {
  std::vector<TextSpan> spans;
  for (auto frag : split(s, ';')) {
    frag = internal::trim(frag);
    const auto parts = split(frag, ' ');
    if (parts.size() != 2) {
      throw Error(line_error(line_no, "malformed fragment '" +
                                          std::string(frag) + "'"));
    }
    const auto start = parse_size(parts[0]);
    const auto end = parse_size(parts[1]);
    if (!start || !end || *start >= *end) {
      throw Error(line_error(line_no, "invalid offsets in fragment '" +
                                          std::string(frag) + "'"));
    }
    if (*end > text_length) {
      throw Error(line_error(line_no, "offset " + std::to_string(*end) +
                                          " beyond text length " +
                                          std::to_string(text_length)));
    }
    spans.emplace_back(*start, *end);
  }
  return spans;
}

}  // namespace

Document parse_standoff(std::string_view ann_text, std::string_view doc_text,
                        std::string doc_id, Warnings* warnings) {
  Document doc;
  doc.doc_id = std::move(doc_id);
  doc.text = std::string(doc_text);
  const std::u32string text = to_code_points(doc_text);
  std::set<std::string, std::less<>> seen_ids;

  const auto all_lines = lines(ann_text);
  for (std::size_t n = 0; n < all_lines.size(); ++n) {
    const std::size_t line_no = n + 1;
    const std::string_view line = all_lines[n];
    if (internal::trim(line).empty() || line.front() == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() < 2) {
      throw Error(line_error(line_no, "expected tab-separated record"));
    }
    const std::string_view ann_id = fields[0];
    if (ann_id.empty() || ann_id.front() != 'T') {
      warn(warnings, doc.doc_id + " " +
                         line_error(line_no, "skipping non-text-bound record " +
                                                 std::string(ann_id)));
      continue;
    }
    if (!seen_ids.insert(std::string(ann_id)).second) {
      throw Error(line_error(line_no,
                             "duplicate annotation id " + std::string(ann_id)));
    }
    const std::string_view type_and_frags = fields[1];
    const std::size_t space = type_and_frags.find(' ');
    if (space == std::string_view::npos || space == 0) {
      throw Error(line_error(line_no, "missing concept id or offsets"));
    }
    std::string concept_id(type_and_frags.substr(0, space));
    auto spans =
        parse_fragments(type_and_frags.substr(space + 1), line_no, text.size());
    Annotation ann;
    ann.concept_id = std::move(concept_id);
    ann.spans = std::move(spans);
    try {
      ann.validate();
    } catch (const Error& e) {
      throw Error(line_error(line_no, e.what()));
    }
    ann.text = covered_text(text, ann);
    if (fields.size() >= 3) {
      const std::string given = collapse_whitespace(fields[2]);
      std::string space_joined;
      for (const auto& s : ann.spans) {
        if (!space_joined.empty()) space_joined += ' ';
        space_joined += to_utf8(text.substr(s.start, s.length()));
      }
      if (given != collapse_whitespace(ann.text) &&
          given != collapse_whitespace(space_joined)) {
        warn(warnings, doc.doc_id + " " +
                           line_error(line_no, "text '" + given +
                                                   "' does not match offsets ('" +
                                                   ann.text + "')"));
      }
    }
    doc.annotations.push_back(std::move(ann));
  }
  return doc;
}

std::string write_standoff(const Document& doc) {
  const std::u32string text = to_code_points(doc.text);
  std::ostringstream out;
  std::size_t next_id = 1;
  for (const auto& ann : doc.annotations) {
    out << 'T' << next_id++ << '\t' << ann.concept_id << ' ';
    for (std::size_t i = 0; i < ann.spans.size(); ++i) {
      if (i > 0) out << ';';
      out << ann.spans[i].start << ' ' << ann.spans[i].end;
    }
    std::string covered;
    if (text.empty()) {
      covered = collapse_whitespace(ann.text);
    } else {
      for (std::size_t i = 0; i < ann.spans.size(); ++i) {
        if (i > 0) covered += " ... ";
        const auto& s = ann.spans[i];
        if (s.end <= text.size()) {
          covered +=
              collapse_whitespace(to_utf8(text.substr(s.start, s.length())));
        }
      }
    }
    out << '\t' << covered << '\n';
  }
  return out.str();
}

std::vector<Sentence> parse_conll(std::string_view text) {
  std::vector<Sentence> sentences;
  Sentence current;
  std::size_t last_end = 0;
  const auto all_lines = lines(text);
  for (std::size_t n = 0; n < all_lines.size(); ++n) {
    const std::size_t line_no = n + 1;
    const std::string_view line = all_lines[n];
    if (internal::trim(line).empty()) {
      if (!current.empty()) sentences.push_back(std::move(current));
      current.clear();
      continue;
    }
    const auto cols = split(line, '\t');
    if (cols.size() != 6) {
      throw Error(line_error(line_no, "expected 6 tab-separated columns, got " +
                                          std::to_string(cols.size())));
    }
    ConllRow row;
    row.token = std::string(cols[0]);
    if (row.token.empty()) throw Error(line_error(line_no, "empty token"));
    const auto start = parse_size(cols[1]);
    const auto end = parse_size(cols[2]);
    if (!start || !end || *start >= *end) {
      throw Error(line_error(line_no, "invalid token offsets"));
    }
    if (*start < last_end) {
      throw Error(line_error(line_no, "non-monotonic token offsets"));
    }
    last_end = *end;
    row.span = TextSpan(*start, *end);
    try {
      row.span_tag = span_tag_from_string(cols[3]);
    } catch (const Error& e) {
      throw Error(line_error(line_no, e.what()));
    }
    if (cols[4].empty()) throw Error(line_error(line_no, "empty id tag"));
    row.id_tag = IdTag::parse(cols[4]);
    if (cols[5] != "-") {
      std::set<std::string> features;
      for (auto f : split(cols[5], ';')) {
        if (f.empty()) throw Error(line_error(line_no, "empty feature"));
        features.emplace(f);
      }
      row.dict_features.assign(features.begin(), features.end());
    }
    current.push_back(std::move(row));
  }
  if (!current.empty()) sentences.push_back(std::move(current));
  return sentences;
}

std::string write_conll(const std::vector<Sentence>& sentences) {
  std::ostringstream out;
  bool first = true;
  for (const auto& sentence : sentences) {
    if (sentence.empty()) continue;
    if (!first) out << '\n';
    first = false;
    for (const auto& row : sentence) {
      out << row.token << '\t' << row.span.start << '\t' << row.span.end
          << '\t' << to_char(row.span_tag) << '\t' << row.id_tag.to_string()
          << '\t';
      if (row.dict_features.empty()) {
        out << '-';
      } else {
        for (std::size_t i = 0; i < row.dict_features.size(); ++i) {
          if (i > 0) out << ';';
          out << row.dict_features[i];
        }
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace crtool
