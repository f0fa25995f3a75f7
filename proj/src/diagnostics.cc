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

#include "crtool/diagnostics.h"

#include <iostream>

namespace crtool {

void Warnings::add(std::string message) {
  std::lock_guard<std::mutex> lock(mu_);
  messages_.push_back(std::move(message));
}

std::vector<std::string> Warnings::messages() const {
  std::lock_guard<std::mutex> lock(mu_);
  return messages_;
}

std::size_t Warnings::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return messages_.size();
}

void warn(Warnings* sink, std::string message) {
  if (sink != nullptr) {
    sink->add(std::move(message));
  } else {
    std::cerr << "warning: " << message << '\n';
  }
}

}  // namespace crtool
