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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nlab/jsonout.hpp"

namespace nlab {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  double e = 0.3;
  double Z = 1.0;
  double m = 1.0;
  double kappa = 0.1;
  double lambda = 10.0;
  double tau = 0.9;
  double lambda1 = 1.0;
  int grid_n = 16;
  double box_L = 8.0;
  int modes_radial = 2;
  int modes_angular = 2;
  int nmax = 2;
  double tol = 1e-10;
  int maxit = 5000;
  std::string format = "json";
  std::string out;
  std::string select;
  std::string axis = "e";
  double from = 0.05;
  double to = 0.5;
  int steps = 10;
};

// Keys accepted in config files and as --key flags.
const std::vector<std::string>& config_keys();

// Sets one key from its textual value; unknown keys and malformed values
// throw ConfigError.
void apply_config(RunConfig& c, const std::string& key, const std::string& value);

// key=value lines, '#' starts a comment, blank lines ignored.
std::vector<std::pair<std::string, std::string>> parse_config_text(
    const std::string& text, const std::string& origin = "config");
std::vector<std::pair<std::string, std::string>> read_config_file(
    const std::string& path);

// Cross-field checks (cutoff order, positivity, format).
void validate_config(const RunConfig& c);

// Effective configuration in key order.
Json config_json(const RunConfig& c);

std::vector<std::string> split_list(const std::string& s);

}  // namespace nlab
