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

#ifndef CRTOOL_CORPUS_IO_H_
#define CRTOOL_CORPUS_IO_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "crtool/diagnostics.h"
#include "crtool/model.h"

namespace crtool {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Every <id>.txt in dir with its <id>.ann (a missing .ann means no
// annotations), sorted by id.
std::vector<Document> load_standoff_dir(const std::filesystem::path& dir,
                                        Warnings* warnings = nullptr);

// Every <id>.conll in dir, keyed by id.
std::map<std::string, std::vector<Sentence>> load_conll_dir(
    const std::filesystem::path& dir);

// Ids of files in dir with the given extension (".txt", ".conll"), sorted.
std::vector<std::string> list_ids(const std::filesystem::path& dir,
                                  std::string_view extension);

}  // namespace crtool

#endif  // CRTOOL_CORPUS_IO_H_
