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

#ifndef CRTOOL_SIMPLIFY_H_
#define CRTOOL_SIMPLIFY_H_

#include <span>
#include <string>
#include <string_view>

#include "crtool/diagnostics.h"
#include "crtool/model.h"
#include "crtool/standoff_io.h"

namespace crtool {

// How a discontinuous annotation collapses to a single span.
enum class UnifyStrategy { kFirstSpan, kFullSpan, kLastSpan };
// Which member of an overlapping pair survives.
enum class UnnestStrategy { kKeepLonger, kKeepShorter };

inline constexpr UnifyStrategy kAllUnifyStrategies[] = {
    UnifyStrategy::kFirstSpan, UnifyStrategy::kFullSpan,
    UnifyStrategy::kLastSpan};
inline constexpr UnnestStrategy kAllUnnestStrategies[] = {
    UnnestStrategy::kKeepLonger, UnnestStrategy::kKeepShorter};

std::string_view to_string(UnifyStrategy s);
std::string_view to_string(UnnestStrategy s);
UnifyStrategy parse_unify_strategy(std::string_view name);
UnnestStrategy parse_unnest_strategy(std::string_view name);

Annotation unify(const Annotation& ann, UnifyStrategy strategy);

// Requires single-span annotations. Overlaps are resolved in one sweep
// ordered by (start, -length); a candidate survives only if it beats every
// overlapping survivor, which it then removes. Equal lengths keep the
// smaller start, then the lexicographically smaller concept. Output is
// sorted.
Document unnest(const Document& doc, UnnestStrategy strategy);

// Snaps every span outward to enclosing token boundaries. Annotations that
// touch no token are dropped with a warning.
Document extend_subword(const Document& doc, std::span<const Token> tokens,
                        Warnings* warnings = nullptr);

// unify -> extend_subword -> unnest.
Document simplify(const Document& doc, UnifyStrategy unify_strategy,
                  UnnestStrategy unnest_strategy,
                  Warnings* warnings = nullptr);

}  // namespace crtool

#endif  // CRTOOL_SIMPLIFY_H_
