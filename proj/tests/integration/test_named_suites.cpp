// Copyright 2026 The fatpoints Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// The full built-in suites; each must pass case by case.

#include <gtest/gtest.h>

#include "fatpoints/report_json.hpp"
#include "fatpoints/suites.hpp"

namespace fatpoints {
namespace {

void expect_all_pass(const SuiteResult& s) {
  EXPECT_TRUE(s.passed());
  for (const auto& c : s.cases) {
    EXPECT_TRUE(c.passed) << s.name << " / " << c.id << "\n  expected " << c.expected.dump()
                          << "\n  observed " << c.observed.dump();
    EXPECT_FALSE(c.provenance.empty()) << c.id;
  }
}

TEST(NamedSuites, DoublePointTable) { expect_all_pass(run_ah_suite(4, 6)); }
TEST(NamedSuites, TriplePoints) { expect_all_pass(run_prop23_suite(default_prop23_cases())); }
TEST(NamedSuites, FlagDegenerations) { expect_all_pass(run_section45_suite()); }
TEST(NamedSuites, Genus) { expect_all_pass(run_genus_suite()); }

TEST(NamedSuites, MapClassification) {
  const SuiteResult s = run_theorem2_suite();
  expect_all_pass(s);
  EXPECT_EQ(s.cases.size(), 10u);
}

}  // namespace
}  // namespace fatpoints
