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
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "nlab/closedform.hpp"
#include "nlab/verify.hpp"

using namespace nlab;

namespace {

const BoundReport* find(const SuiteResult& r, const std::string& id) {
  for (const auto& b : r.reports)
    if (b.id == id) return &b;
  return nullptr;
}

VerifySetup small_setup(double e) {
  VerifySetup s;
  s.solve.params = make_params(e, 1.0, 1.0, 0.1, 10.0);
  s.solve.res = {8, 8.0, 1, 2, 1};
  return s;
}

}  // namespace

TEST_CASE("report status and tolerance") {
  const BoundReport a = make_report("x", "a", 1.0, 2.0);
  CHECK(a.status == Status::Pass);
  CHECK(a.slack == 1.0);
  CHECK(make_report("x", "a", 2.0, 1.0).status == Status::Fail);
  CHECK(make_report("x", "a", 1.0 + 5e-11, 1.0).status == Status::Pass);
  CHECK(make_report("x", "a", 1e6 * (1.0 + 5e-11), 1e6).status == Status::Pass);
  CHECK(make_report("x", "a", 1e6 * (1.0 + 2e-10), 1e6).status == Status::Fail);
  CHECK(report_atol(0.0) == 1e-10);
  const BoundReport s = skipped_report("y", "b", "why not");
  CHECK(s.status == Status::Skipped);
  CHECK(std::isnan(s.slack));
  CHECK(s.reason == "why not");
  CHECK(status_name(Status::Fail) == "fail");
}

TEST_CASE("selection by prefix") {
  CHECK(selected({}, "energy.upper"));
  CHECK(selected({"energy"}, "energy.lower"));
  CHECK_FALSE(selected({"energy"}, "binding"));
  CHECK(selected({"moments.exp", "binding"}, "binding"));
}

TEST_CASE("check ids are unique") {
  auto ids = check_ids();
  const std::size_t n = ids.size();
  std::sort(ids.begin(), ids.end());
  CHECK(std::unique(ids.begin(), ids.end()) == ids.end());
  CHECK(n == 18);
}

TEST_CASE("identity checks alone skip the ground state") {
  VerifySetup s = small_setup(0.3);
  s.select = {"identity"};
  const SuiteResult r = run_suite(s);
  CHECK_FALSE(r.solved);
  REQUIRE(r.reports.size() == 2);
  CHECK(r.reports[0].id == "identity.pull_through");
  for (const auto& b : r.reports) CHECK(b.status == Status::Pass);
}

TEST_CASE("e = 0 skips the relativistic checks") {
  const SuiteResult r = run_suite(small_setup(0.0));
  CHECK(r.failures() == 0);
  for (const char* id : {"localization.sqrt", "moments.log", "moments.exp"}) {
    const BoundReport* b = find(r, id);
    REQUIRE(b != nullptr);
    CHECK(b->status == Status::Skipped);
    CHECK(b->reason.find("e = 0") == 0);
  }
  const BoundReport* up = find(r, "energy.upper");
  REQUIRE(up != nullptr);
  CHECK(up->status == Status::Pass);
}

TEST_CASE("outside the coupling window the checks are skipped with a reason") {
  const SuiteResult r = run_suite(small_setup(1.2));
  CHECK(r.failures() == 0);
  const BoundReport* up = find(r, "energy.upper");
  REQUIRE(up != nullptr);
  CHECK(up->status == Status::Skipped);
  CHECK(up->reason.find("C_UV >= 1") == 0);
  const BoundReport* q = find(r, "overlap.q_bound");
  REQUIRE(q != nullptr);
  CHECK(q->status == Status::Skipped);
  CHECK(std::is_sorted(r.reports.begin(), r.reports.end(), [](const auto& a, const auto& b) {
    const auto& ids = check_ids();
    return std::find(ids.begin(), ids.end(), a.id) < std::find(ids.begin(), ids.end(), b.id);
  }));
}

TEST_CASE("suite at small resolution") {
  const SuiteResult r = run_suite(small_setup(0.3));
  CHECK(r.solved);
  CHECK(r.reports.size() == check_ids().size());
  for (const auto& b : r.reports) {
    CAPTURE(b.id);
    CHECK(b.status != Status::Fail);
    if (b.status != Status::Skipped) CHECK(b.slack == doctest::Approx(b.rhs - b.lhs));
  }
}
