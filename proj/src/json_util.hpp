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


#ifndef ROBUSTNET_SRC_JSON_UTIL_HPP_
#define ROBUSTNET_SRC_JSON_UTIL_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "robustnet/instance_io.hpp"

namespace robustnet::internal {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

// Throws ParseError with line and column on syntax errors.
Json ParseJson(std::string_view text, const std::string& source);

// A value inside a parsed document together with its location, so type
// errors can name the offending field.
class Field {
 public:
  Field(const Json& value, std::string source, std::string path = "")
      : value_(&value), source_(std::move(source)), path_(std::move(path)) {}

  [[noreturn]] void Fail(const std::string& message) const;
  void RequireObject() const;
  bool Has(const std::string& key) const;
  Field Get(const std::string& key) const;
  std::vector<Field> Elements() const;
  std::string String() const;
  double Number() const;
  int Integer() const;
  const Json& value() const { return *value_; }

 private:
  const Json* value_;
  std::string source_;
  std::string path_;
};

}  // namespace robustnet::internal

#endif  // ROBUSTNET_SRC_JSON_UTIL_HPP_
