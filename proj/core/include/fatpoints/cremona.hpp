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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fatpoints/polyspace.hpp"
#include "fatpoints/schemes.hpp"

namespace fatpoints {

// The map P^n --> P^n given by n+1 forms of degree d.
struct RationalMap {
  int n = 0;
  int d = 0;
  BasisPtr basis;
  std::vector<Vector> forms;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::optional<SchemeSpec> source;
};

// Forms are the normalized kernel basis of the condition matrix. Throws
// NotACremonaCandidate if the sampled system is not n-dimensional.
RationalMap map_from_system(const SchemeSpec& spec, std::uint32_t prime,
                            std::uint64_t seed);

enum class VerdictKind { kBirational, kFinite, kFiberType, kInconclusive };

struct Verdict {
  VerdictKind kind = VerdictKind::kInconclusive;
  std::uint64_t degree = 0;  // generic fiber size when kind == kFinite

  bool operator==(const Verdict&) const = default;
};

std::string to_string(const Verdict& v);

struct Thresholds {
  double birational = 0.7;  // fraction_unique needed for "birational"
  double fiber = 3.0;       // image <= domain * fiber / p means fiber-type
  double finite = 0.6;      // mass share on one fiber size k >= 2
};

struct FiberCensus {
  std::uint32_t prime = 0;
  int n = 0;
  std::uint64_t domain_size = 0;
  std::uint64_t base_points = 0;
  std::uint64_t image_size = 0;
  // fiber size -> number of image points with that many preimages
  std::map<std::uint64_t, std::uint64_t> histogram;
  std::uint64_t unique_points = 0;
  double fraction_unique = 0.0;
  Verdict verdict;
};

struct CensusOptions {
  double op_budget = 1e10;
  unsigned threads = 0;  // 0: hardware concurrency
  Thresholds thresholds;
};

// |P^n(F_p)| = (p^{n+1} - 1) / (p - 1).
std::uint64_t projective_point_count(std::uint32_t p, int n);

// Exhaustive evaluation over P^n(F_p). Throws BudgetExceeded when
// |P^n(F_p)| * binom(n+d, n) exceeds the budget.
FiberCensus fiber_census(const RationalMap& map,
                         const CensusOptions& options = {});

Verdict classify(const FiberCensus& census, const Thresholds& t = {});

// Rank of the symmetric matrix of a quadric (p odd).
std::size_t quadric_rank(const PrimeField& field, const Form& quadric);

// Census primes used for an n-dimensional map: a primary and a confirming
// prime, both small enough for an exhaustive census.
std::vector<std::uint32_t> census_primes(int n);

struct MapClassification {
  SchemeSpec spec;
  std::vector<FiberCensus> censuses;  // one per prime
  std::vector<std::uint64_t> seeds;   // seed used at each prime
  bool agree = false;                 // same verdict at every prime
  Verdict verdict;                    // meaningful when agree
};

// Builds the map at each prime (trying successive seeds until the sampled
// system has dimension n) and runs the census.
MapClassification classify_system(const SchemeSpec& spec,
                                  const std::vector<std::uint32_t>& primes,
                                  const CensusOptions& options = {});

enum class Identifiability { kIdentifiable, kNotIdentifiable, kNonPerfect };

struct IdentifiabilityReport {
  int n = 0;
  int d = 0;
  Identifiability kind = Identifiability::kNonPerfect;
  std::int64_t rank = 0;  // k(n,d) when integral
  // Census of L_{n,d}(2^{k-1}) when it fits the budget.
  std::optional<MapClassification> corroboration;
  std::string note;
};

std::string to_string(Identifiability kind);

IdentifiabilityReport identifiability_verdict(int n, int d,
                                              bool corroborate = true,
                                              const CensusOptions& options = {});

}  // namespace fatpoints
