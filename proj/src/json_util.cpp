// Copyright 2026 The robustnet Authors
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


#include "json_util.hpp"

#include <cmath>

namespace robustnet::internal {

Json ParseJson(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    size_t line = 1, column = 1;
    const size_t stop = std::min(static_cast<size_t>(e.byte), text.size() + 1);
    for (size_t i = 0; i + 1 < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" +
                     std::to_string(column) + ": syntax error");
  }
}

void Field::Fail(const std::string& message) const {
  throw ParseError(source_ + ": " + (path_.empty() ? "document" : path_) + ": " +
                   message);
}

void Field::RequireObject() const {
  if (!value_->is_object()) Fail("expected an object");
}

bool Field::Has(const std::string& key) const {
  RequireObject();
  return value_->contains(key);
}

Field Field::Get(const std::string& key) const {
  RequireObject();
  const std::string path = path_.empty() ? key : path_ + "." + key;
  auto it = value_->find(key);
  if (it == value_->end()) Field(*value_, source_, path).Fail("missing field");
  return Field(*it, source_, path);
}

std::vector<Field> Field::Elements() const {
  if (!value_->is_array()) Fail("expected an array");
  std::vector<Field> out;
  for (size_t i = 0; i < value_->size(); ++i) {
    out.emplace_back((*value_)[i], source_,
                     path_ + "[" + std::to_string(i) + "]");
  }
  return out;
}

std::string Field::String() const {
  if (!value_->is_string()) Fail("expected a string");
  return value_->get<std::string>();
}

double Field::Number() const {
  if (!value_->is_number()) Fail("expected a number");
  const double v = value_->get<double>();
  if (!std::isfinite(v)) Fail("expected a finite number");
  return v;
}

int Field::Integer() const {
  const double v = Number();
  if (v != std::floor(v) || std::abs(v) > 1e9) Fail("expected an integer");
  return static_cast<int>(v);
}

}  // namespace robustnet::internal
