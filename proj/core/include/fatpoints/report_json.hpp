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

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "fatpoints/cremona.hpp"
#include "fatpoints/degeneration.hpp"
#include "fatpoints/numerology.hpp"
#include "fatpoints/schemes.hpp"
#include "fatpoints/suites.hpp"

namespace fatpoints {

inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json to_json(const DimensionReport& r);
nlohmann::json to_json(const SequenceTable& t);
nlohmann::json to_json(const SequenceVerdicts& v);
nlohmann::json to_json(const FiberCensus& c);
nlohmann::json to_json(const MapClassification& m);
nlohmann::json to_json(const IdentifiabilityReport& r);
nlohmann::json to_json(const CollisionExperiment& e);
nlohmann::json to_json(const IndipReport& r);
nlohmann::json to_json(const LimitReport& r);
nlohmann::json to_json(const CastelnuovoAccounting& a);
nlohmann::json to_json(const SuiteResult& s, bool with_timings = true);

// Exact integers are emitted as JSON numbers when they fit in 64 bits and
// as decimal strings otherwise.
nlohmann::json big_to_json(const BigInt& v);

// Fixed six-decimal rendering used for fraction_unique.
std::string six_decimals(double v);

// One CSV line per case: suite,id,passed,expected,observed.
std::string suite_csv(const SuiteResult& s);

}  // namespace fatpoints
