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

#include "fatpoints/report_json.hpp"
#include "fatpoints/spec_text.hpp"
#include "fatpoints/suites.hpp"

namespace fatpoints {
namespace {

using nlohmann::json;

TEST(Report, ExactIntegersAndSixDecimals) {
  EXPECT_EQ(big_to_json(BigInt(42)), json(42));
  EXPECT_EQ(big_to_json(-BigInt(7)), json(-7));
  EXPECT_EQ(big_to_json(binomial(200, 100)), json(binomial(200, 100).str()));
  EXPECT_EQ(six_decimals(0.98809612), "0.988096");
  EXPECT_EQ(six_decimals(1.0), "1.000000");
  FiberCensus c;
  c.fraction_unique = 2.0 / 3.0;
  EXPECT_EQ(to_json(c).at("fraction_unique").dump(), "0.666667");
}

TEST(Report, DimensionReportKeys) {
  const json j = to_json(dimension(parse_spec("L(2,4;2^5)")));
  for (const char* k : {"virtual", "expected", "computed", "special", "unstable", "trials"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_TRUE(j.at("computed").is_number_integer());
}

TEST(Report, SequenceTableIsExact) {
  const json j = to_json(hs_sequences(12, 12));
  EXPECT_EQ(j.at("k"), json(208012));
  EXPECT_EQ(j.at("s").size(), 11u);
}

TEST(Report, CsvHasOneLinePerCase) {
  SuiteResult s;
  s.name = "x";
  s.cases.push_back({"a,b", json{{"v", 1}}, json{{"v", 1}}, true, "p", 0});
  s.cases.push_back({"c", json::object(), json::object(), false, "q", 0});
  const std::string csv = suite_csv(s);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_NE(csv.find("\"a,b\""), std::string::npos);
}

}  // namespace
}  // namespace fatpoints
