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

#include "crtool/corpus_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "crtool/standoff_io.h"

namespace crtool {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, std::string_view content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("error writing " + path.string());
}

std::vector<std::string> list_ids(const fs::path& dir,
                                  std::string_view extension) {
  if (!fs::is_directory(dir)) throw Error(dir.string() + " is not a directory");
  std::vector<std::string> ids;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == extension) {
      ids.push_back(entry.path().stem().string());
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<Document> load_standoff_dir(const fs::path& dir,
                                        Warnings* warnings) {
  std::vector<Document> docs;
  for (const auto& id : list_ids(dir, ".txt")) {
    const std::string text = read_file(dir / (id + ".txt"));
    const fs::path ann = dir / (id + ".ann");
    const std::string ann_text = fs::exists(ann) ? read_file(ann) : "";
    try {
      docs.push_back(parse_standoff(ann_text, text, id, warnings));
    } catch (const Error& e) {
      throw Error(ann.string() + ": " + e.what());
    }
  }
  return docs;
}

std::map<std::string, std::vector<Sentence>> load_conll_dir(
    const fs::path& dir) {
  std::map<std::string, std::vector<Sentence>> out;
  for (const auto& id : list_ids(dir, ".conll")) {
    const fs::path path = dir / (id + ".conll");
    try {
      out[id] = parse_conll(read_file(path));
    } catch (const Error& e) {
      throw Error(path.string() + ": " + e.what());
    }
  }
  return out;
}

}  // namespace crtool
