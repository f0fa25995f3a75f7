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

#ifndef CRTOOL_UNICODE_H_
#define CRTOOL_UNICODE_H_

#include <string>
#include <string_view>

namespace crtool {

// UTF-8 <-> code points. Ill-formed sequences decode to U+FFFD.
std::u32string to_code_points(std::string_view utf8);
std::string to_utf8(std::u32string_view text);

// Number of code points in a UTF-8 string.
std::size_t code_point_length(std::string_view utf8);

bool is_word_char(char32_t c);  // letter, digit or combining mark
bool is_space(char32_t c);

// NFKC compatibility normalisation followed by full lower-casing.
std::u32string nfkc_lower(std::u32string_view text);

// Collapses runs of whitespace into one space and trims both ends.
std::string collapse_whitespace(std::string_view utf8);

}  // namespace crtool

#endif  // CRTOOL_UNICODE_H_
