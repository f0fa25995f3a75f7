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

#include "crtool/standoff_io.h"
#include "crtool/unicode.h"
#include "test_support.h"

namespace crtool {
namespace {

using testing::Rng;

TEST_CASE("parse_standoff single span") {
  const std::string text = "agent of change";
  const Document doc = parse_standoff("T1\tCHEBI:33893 0 5\tagent\n", text, "d");
  REQUIRE(doc.annotations.size() == 1);
  CHECK(doc.annotations[0] == Annotation("CHEBI:33893", {{0, 5}}));
  CHECK(doc.annotations[0].text == "agent");
}

TEST_CASE("parse_standoff discontinuous") {
  const std::string text = "ES and somatic cells";
  Warnings warnings;
  const Document doc = parse_standoff("T2\tCL:0002322 0 2;15 20\tES cells\n",
                                      text, "d", &warnings);
  REQUIRE(doc.annotations.size() == 1);
  CHECK(doc.annotations[0].spans == std::vector<TextSpan>{{0, 2}, {15, 20}});
  CHECK(warnings.size() == 0);
}

TEST_CASE("parse_standoff empty file") {
  CHECK(parse_standoff("", "some text").annotations.empty());
}

TEST_CASE("parse_standoff errors and warnings") {
  const std::string text = "short";
  try {
    parse_standoff("T1\tX:1 0 2\tsh\nT2\tX:1 0 50\tboom\n", text);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_standoff("T1\tX:1 0 2\tsh\nT1\tX:1 0 2\tsh\n", text),
                  Error);
  CHECK_THROWS_AS(parse_standoff("T1\tX:1 3 2\tsh\n", text), Error);
  CHECK_THROWS_AS(parse_standoff("T1\tX:1\n", text), Error);

  Warnings warnings;
  const Document doc =
      parse_standoff("T1\tX:1 0 2\twrong\nN1\tReference T1 X:1\n#note\n", text,
                     "d", &warnings);
  CHECK(doc.annotations.size() == 1);  // offsets win over text
  CHECK(warnings.size() == 2);
}

TEST_CASE("offsets count code points") {
  const std::string text = "α-tubulin binds";
  const Document doc = parse_standoff("T1\tPR:1 0 9\tα-tubulin\n", text, "d");
  CHECK(doc.annotations[0].text == "α-tubulin");
}

TEST_CASE("write_standoff") {
  Document empty{"d", "text", {}};
  CHECK(write_standoff(empty).empty());

  Document doc{"d", "ES and somatic cells",
               {Annotation("CL:1", {{0, 2}, {15, 20}}),
                Annotation("CL:2", {{7, 20}})}};
  const std::string out = write_standoff(doc);
  CHECK(out ==
        "T1\tCL:1 0 2;15 20\tES ... cells\nT2\tCL:2 7 20\tsomatic cells\n");
  Warnings warnings;
  const Document back = parse_standoff(out, doc.text, "d", &warnings);
  CHECK(back.annotations == doc.annotations);
  CHECK(warnings.size() == 0);
}

TEST_CASE("stand-off round trip on generated documents") {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const Document doc = testing::random_complex_document(rng);
    Warnings warnings;
    const Document back =
        parse_standoff(write_standoff(doc), doc.text, doc.doc_id, &warnings);
    CHECK(back.annotations == doc.annotations);
    CHECK(warnings.size() == 0);
  }
}

TEST_CASE("parse_conll rows") {
  const auto sentences = parse_conll(
      "Hexokinase\t0\t10\tB\tPR:X\tPR:X\nI\t11\t12\tE\tPR:X\tPR:X;PR:A\n"
      "of\t13\t15\tO\tNIL\t-\n");
  REQUIRE(sentences.size() == 1);
  const auto& rows = sentences[0];
  CHECK(rows[0].token == "Hexokinase");
  CHECK(rows[0].span_tag == SpanTag::B);
  CHECK(rows[0].id_tag == IdTag("PR:X"));
  CHECK(rows[0].dict_features == std::vector<std::string>{"PR:X"});
  CHECK(rows[1].dict_features == std::vector<std::string>{"PR:A", "PR:X"});
  CHECK(rows[2].span_tag == SpanTag::O);
  CHECK(rows[2].id_tag.is_nil());
  CHECK(rows[2].dict_features.empty());
}

TEST_CASE("parse_conll sentences and errors") {
  CHECK(parse_conll("a\t0\t1\tO\tNIL\t-\n\nb\t2\t3\tS\tX:1\t-\n\n\n").size() ==
        2);
  CHECK(parse_conll("").empty());
  CHECK_THROWS_AS(parse_conll("a\t0\t1\tQ\tNIL\t-\n"), Error);
  CHECK_THROWS_AS(parse_conll("a\t0\t1\tO\tNIL\n"), Error);
  CHECK_THROWS_AS(parse_conll("a\t5\t6\tO\tNIL\t-\nb\t2\t3\tO\tNIL\t-\n"),
                  Error);
  try {
    parse_conll("a\t0\t1\tO\tNIL\t-\nb\tx\t3\tO\tNIL\t-\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("write_conll inverts parse_conll") {
  const std::vector<std::string> inputs = {
      "Hexokinase\t0\t10\tB\tPR:X\tPR:X\nI\t11\t12\tE\tPR:X\tPR:X\n",
      "of\t11\t13\tO\tNIL\t-\n",
      "a\t0\t1\tS\tX:1\tX:1;X:2\n\nb\t2\t3\tO\tNIL\t-\n"};
  for (const auto& in : inputs) CHECK(write_conll(parse_conll(in)) == in);
}

TEST_CASE("tokenize") {
  const auto tokens = tokenize(std::string_view("ES and somatic cells"));
  REQUIRE(tokens.size() == 4);
  CHECK(tokens[0] == Token{"ES", {0, 2}});
  CHECK(tokens[1] == Token{"and", {3, 6}});
  CHECK(tokens[2] == Token{"somatic", {7, 14}});
  CHECK(tokens[3] == Token{"cells", {15, 20}});

  const auto dash = tokenize(std::string_view("PI3K-dependent"));
  REQUIRE(dash.size() == 3);
  CHECK(dash[0].text == "PI3K");
  CHECK(dash[1].text == "-");
  CHECK(dash[2].text == "dependent");

  CHECK(tokenize(std::string_view("")).empty());
  CHECK(tokenize(std::string_view("naïve µM")).size() == 2);
}

TEST_CASE("tokenize spans are sorted, disjoint and whitespace-free") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::string text = testing::random_text(rng, 25);
    const auto cps = to_code_points(text);
    const auto tokens = tokenize(std::string_view(text));
    std::size_t covered = 0;
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      if (t > 0) CHECK(tokens[t - 1].span.end <= tokens[t].span.start);
      for (std::size_t c = tokens[t].span.start; c < tokens[t].span.end; ++c) {
        CHECK_FALSE(is_space(cps[c]));
      }
      covered += tokens[t].span.length();
    }
    std::size_t non_space = 0;
    for (char32_t c : cps) non_space += is_space(c) ? 0 : 1;
    CHECK(covered == non_space);
  }
}

}  // namespace
}  // namespace crtool
