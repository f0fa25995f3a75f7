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

#ifndef CRTOOL_DIAGNOSTICS_H_
#define CRTOOL_DIAGNOSTICS_H_

#include <mutex>
#include <string>
#include <vector>

namespace crtool {

// Collects non-fatal problems found while reading or processing input.
// Thread-safe. Passing nullptr wherever a Warnings* is accepted sends the
// message to stderr instead.
class Warnings {
 public:
  void add(std::string message);
  std::vector<std::string> messages() const;
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::vector<std::string> messages_;
};

void warn(Warnings* sink, std::string message);

}  // namespace crtool

#endif  // CRTOOL_DIAGNOSTICS_H_
