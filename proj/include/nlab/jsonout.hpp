/*
 * Copyright 2026 The nelsonlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nlab {

// Ordered JSON tree with doubles written as %.17g (non-finite as null).
class Json {
 public:
  enum class Kind { Null, Bool, Int, Number, String, Array, Object };

  Json() = default;
  Json(std::nullptr_t) {}
  Json(bool b) : kind_(Kind::Bool), b_(b) {}
  Json(int i) : kind_(Kind::Int), i_(i) {}
  Json(long i) : kind_(Kind::Int), i_(i) {}
  Json(long long i) : kind_(Kind::Int), i_(i) {}
  Json(unsigned long i) : kind_(Kind::Int), i_(static_cast<std::int64_t>(i)) {}
  Json(unsigned long long i)
      : kind_(Kind::Int), i_(static_cast<std::int64_t>(i)) {}
  Json(double d) : kind_(Kind::Number), d_(d) {}
  Json(const char* s) : kind_(Kind::String), s_(s) {}
  Json(std::string s) : kind_(Kind::String), s_(std::move(s)) {}

  static Json array();
  static Json object();

  Kind kind() const { return kind_; }
  Json& set(const std::string& key, Json v);
  // Number under key plus "<key>_display" rounded to 6 significant digits.
  Json& set_num(const std::string& key, double v);
  Json& push(Json v);
  std::size_t size() const;

  std::string dump(int indent = 2) const;

 private:
  void write(std::string& out, int indent, int depth) const;

  Kind kind_ = Kind::Null;
  bool b_ = false;
  std::int64_t i_ = 0;
  double d_ = 0.0;
  std::string s_;
  std::vector<Json> items_;
  std::vector<std::pair<std::string, Json>> members_;
};

std::string format17(double v);
std::string format_display(double v);
std::string json_escape(const std::string& s);
std::string csv_field(const std::string& s);

}  // namespace nlab
