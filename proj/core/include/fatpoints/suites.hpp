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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fatpoints/cremona.hpp"
#include "fatpoints/schemes.hpp"

namespace fatpoints {

struct CaseResult {
  std::string id;
  nlohmann::json expected;
  nlohmann::json observed;
  bool passed = false;
  // Where the expected value comes from: a cited statement or an oracle.
  std::string provenance;
  double elapsed_ms = 0.0;
};

struct SuiteResult {
  std::string name;
  std::vector<CaseResult> cases;
  std::vector<std::uint32_t> primes;
  std::vector<std::uint64_t> seeds;
  double elapsed_ms = 0.0;

  bool passed() const;
  std::size_t failures() const;
};

struct SuiteOptions {
  std::vector<std::uint32_t> primes = default_primes();
  std::vector<std::uint64_t> seeds = default_seeds();
  CensusOptions census;
};

// Every (n, d, h) with n <= n_max, 2 <= d <= d_max, 1 <= h <= ceil(k(n,d)).
SuiteResult run_ah_suite(int n_max, int d_max, const SuiteOptions& opt = {});

// L_{n,d}(3, 2^{r(n,d)}) nonspecial for each case, plus the two named
// systems L_{3,3}(3,2^3) (dimension 0) and L_{3,4}(3,2^7) (empty).
SuiteResult run_prop23_suite(const std::vector<std::pair<int, int>>& cases,
                             const SuiteOptions& opt = {});
std::vector<std::pair<int, int>> default_prop23_cases();

// Flag-degeneration systems for small perfect (n, d), their -H and -2H
// residuals, the plane and quartic/quintic sub-claims, and the cubic
// specializations in P^6 and P^7.
SuiteResult run_section45_suite(const SuiteOptions& opt = {});

// Census classification of the Cremona candidates and the non-birational
// comparison systems.
SuiteResult run_theorem2_suite(const SuiteOptions& opt = {});

// Plane genus bookkeeping and the emptiness of the auxiliary plane systems.
SuiteResult run_genus_suite(const SuiteOptions& opt = {});

// Runs a manifest: a JSON array of {suite, case, expected, anchor}.
SuiteResult run_manifest(const nlohmann::json& manifest,
                         const SuiteOptions& opt = {});

// L^H_n(d): triple point on H_2 and double points distributed along the
// flag H_2 c ... c H_n according to hs_sequences(n, d).
SchemeSpec flag_degeneration_spec(int n, int d);
// Same counts with every point and direction generic.
SchemeSpec generic_induction_spec(int n, int d);

}  // namespace fatpoints
