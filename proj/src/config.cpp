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
#include "nlab/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace nlab {

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> k = {
      "e",      "Z",    "m",     "kappa",         "lambda",        "tau",
      "lambda1", "grid-n", "box-L", "modes-radial", "modes-angular", "nmax",
      "tol",    "maxit", "format", "out",          "select",        "axis",
      "from",   "to",   "steps"};
  return k;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double d = 0.0;
  try {
    d = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError("value for '" + key + "' is not a number: " + v);
  }
  if (pos != v.size() || !std::isfinite(d))
    throw ConfigError("value for '" + key + "' is not a finite number: " + v);
  return d;
}

int to_int(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  long i = 0;
  try {
    i = std::stol(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError("value for '" + key + "' is not an integer: " + v);
  }
  if (pos != v.size() || i < -1000000000L || i > 1000000000L)
    throw ConfigError("value for '" + key + "' is not an integer: " + v);
  return static_cast<int>(i);
}

}  // namespace

void apply_config(RunConfig& c, const std::string& key,
                  const std::string& value) {
  const std::string v = trim(value);
  if (key == "e") c.e = to_double(key, v);
  else if (key == "Z") c.Z = to_double(key, v);
  else if (key == "m") c.m = to_double(key, v);
  else if (key == "kappa") c.kappa = to_double(key, v);
  else if (key == "lambda") c.lambda = to_double(key, v);
  else if (key == "tau") c.tau = to_double(key, v);
  else if (key == "lambda1") c.lambda1 = to_double(key, v);
  else if (key == "grid-n") c.grid_n = to_int(key, v);
  else if (key == "box-L") c.box_L = to_double(key, v);
  else if (key == "modes-radial") c.modes_radial = to_int(key, v);
  else if (key == "modes-angular") c.modes_angular = to_int(key, v);
  else if (key == "nmax") c.nmax = to_int(key, v);
  else if (key == "tol") c.tol = to_double(key, v);
  else if (key == "maxit") c.maxit = to_int(key, v);
  else if (key == "format") c.format = v;
  else if (key == "out") c.out = v;
  else if (key == "select") c.select = v;
  else if (key == "axis") c.axis = v;
  else if (key == "from") c.from = to_double(key, v);
  else if (key == "to") c.to = to_double(key, v);
  else if (key == "steps") c.steps = to_int(key, v);
  else throw ConfigError("unknown config key '" + key + "'");
}

std::vector<std::pair<std::string, std::string>> parse_config_text(
    const std::string& text, const std::string& origin) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(no) +
                        ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    const auto& keys = config_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ConfigError(origin + ":" + std::to_string(no) +
                        ": unknown config key '" + key + "'");
    out.emplace_back(key, trim(line.substr(eq + 1)));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> read_config_file(
    const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str(), path);
}

void validate_config(const RunConfig& c) {
  if (!(c.Z > 0.0)) throw ConfigError("Z must be positive");
  if (!(c.m > 0.0)) throw ConfigError("m must be positive");
  if (!(c.kappa > 0.0)) throw ConfigError("kappa must be positive");
  if (!(c.kappa < c.lambda))
    throw ConfigError("cutoff order violated: need kappa < lambda");
  if (!(c.lambda1 > 0.0)) throw ConfigError("lambda1 must be positive");
  if (c.grid_n < 4 || c.grid_n % 2)
    throw ConfigError("grid-n must be even and at least 4");
  if (!(c.box_L > 0.0)) throw ConfigError("box-L must be positive");
  if (c.modes_radial < 1 || c.modes_angular < 1)
    throw ConfigError("mode counts must be positive");
  if (c.nmax < 0 || c.nmax > 255) throw ConfigError("nmax must lie in [0, 255]");
  if (!(c.tol > 0.0)) throw ConfigError("tol must be positive");
  if (c.maxit < 1) throw ConfigError("maxit must be positive");
  if (c.format != "json" && c.format != "csv")
    throw ConfigError("format must be json or csv");
  if (c.steps < 1) throw ConfigError("steps must be positive");
}

Json config_json(const RunConfig& c) {
  Json j = Json::object();
  j.set("e", c.e);
  j.set("Z", c.Z);
  j.set("m", c.m);
  j.set("kappa", c.kappa);
  j.set("lambda", c.lambda);
  j.set("tau", c.tau);
  j.set("lambda1", c.lambda1);
  j.set("grid-n", c.grid_n);
  j.set("box-L", c.box_L);
  j.set("modes-radial", c.modes_radial);
  j.set("modes-angular", c.modes_angular);
  j.set("nmax", c.nmax);
  j.set("tol", c.tol);
  j.set("maxit", c.maxit);
  j.set("format", c.format);
  j.set("out", c.out);
  j.set("select", c.select);
  j.set("axis", c.axis);
  j.set("from", c.from);
  j.set("to", c.to);
  j.set("steps", c.steps);
  return j;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace nlab
