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

#include <string>
#include <utility>
#include <vector>

#include "nlab/observables.hpp"

namespace nlab {

enum class Status { Pass, Fail, Skipped };
std::string status_name(Status s);

// Inequality lhs <= rhs with slack = rhs - lhs.
struct BoundReport {
  std::string id;
  std::string anchor;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  Status status = Status::Skipped;
  std::string reason;
  std::string notes;
};

double report_atol(double rhs);
BoundReport make_report(std::string id, std::string anchor, double lhs,
                        double rhs, std::string notes = {});
BoundReport skipped_report(std::string id, std::string anchor,
                           std::string reason);

struct VerifySetup {
  SolveSetup solve;
  double tau = 0.9;
  std::vector<std::string> select;  // id prefixes; empty selects all
};

struct Diagnostic {
  std::string name;
  double value = 0.0;
};

struct SuiteResult {
  std::vector<BoundReport> reports;
  std::vector<Diagnostic> diagnostics;
  bool solved = false;
  GroundStateReport ground;
  double v0_energy_rel = 0.0;

  int failures() const;
};

bool selected(const std::vector<std::string>& select, const std::string& id);

// Every check in a fixed order; failures never abort the suite.
SuiteResult run_suite(const VerifySetup& s);

// Ids in suite order.
const std::vector<std::string>& check_ids();

// R values scanned for the second and exponential moment bounds.
const std::vector<double>& moment_radii();
const std::vector<double>& exp_radii();

}  // namespace nlab
