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


#include <gtest/gtest.h>

#include "fatpoints/error.hpp"
#include "fatpoints/report_json.hpp"
#include "fatpoints/spec_text.hpp"
#include "fatpoints/suites.hpp"

namespace fatpoints {
namespace {

using nlohmann::json;

TEST(Suites, SmallDoublePointTable) {
  const SuiteResult s = run_ah_suite(3, 4);
  EXPECT_TRUE(s.passed()) << to_json(s).dump(1);
  EXPECT_GT(s.cases.size(), 20u);
  for (const auto& c : s.cases) EXPECT_FALSE(c.provenance.empty());
}

TEST(Suites, TriplePointSweep) {
  const SuiteResult s = run_prop23_suite({{3, 4}, {3, 5}});
  EXPECT_TRUE(s.passed()) << to_json(s).dump(1);
  EXPECT_EQ(s.cases.size(), 4u);
}

TEST(Suites, Genus) {
  const SuiteResult s = run_genus_suite();
  EXPECT_TRUE(s.passed()) << to_json(s).dump(1);
}

TEST(Suites, FlagSpecs) {
  EXPECT_EQ(print_spec(generic_induction_spec(5, 4)), "L(5,4;3[15],2^14)");
  const SchemeSpec f = flag_degeneration_spec(5, 4);
  EXPECT_EQ(virtual_dim(f), 5);
  EXPECT_EQ(f.points[0].placement, Placement{OnSubspace{2}});
  EXPECT_EQ(f.flag, (std::vector<int>{2, 3, 4, 5}));
  EXPECT_EQ(dimension(f).computed, 5);
}

TEST(Suites, ManifestRunner) {
  const json m = json::parse(R"json({
    "name": "mini", "primes": [32003], "seeds": [1, 2],
    "cases": [
      {"suite": "dim", "case": "L(2,4;2^5)", "expected": {"computed": 0, "special": true}, "anchor": "a"},
      {"suite": "k", "case": "5,4", "expected": {"k": 21}, "anchor": "b"},
      {"suite": "dim", "case": "L(3,3;2^4)", "expected": {"computed_min": 3, "computed_max": 3}, "anchor": "c"},
      {"suite": "dim", "case": "L(3,3;2^4)", "expected": {"computed": 4}, "anchor": "d"},
      {"suite": "nope", "case": "1", "expected": {}, "anchor": "e"},
      {"suite": "dim", "case": "L(3,3;2^", "expected": {}, "anchor": "f"}
    ]})json");
  const SuiteResult s = run_manifest(m);
  ASSERT_EQ(s.cases.size(), 6u);
  EXPECT_EQ(s.name, "mini");
  EXPECT_EQ(s.primes, std::vector<std::uint32_t>{32003});
  EXPECT_TRUE(s.cases[0].passed);
  EXPECT_TRUE(s.cases[1].passed);
  EXPECT_TRUE(s.cases[2].passed);
  EXPECT_FALSE(s.cases[3].passed);
  EXPECT_FALSE(s.cases[4].passed);  // unknown kinds are failures, not crashes
  EXPECT_FALSE(s.cases[5].passed);
  EXPECT_EQ(s.failures(), 3u);
  EXPECT_EQ(s.cases[0].provenance, "a");
  // A bare array is accepted too.
  EXPECT_EQ(run_manifest(m.at("cases")).cases.size(), 6u);
}

TEST(Suites, ReplayIsDeterministic) {
  const SuiteResult a = run_genus_suite(), b = run_genus_suite();
  EXPECT_EQ(to_json(a, false).dump(), to_json(b, false).dump());
}

}  // namespace
}  // namespace fatpoints
