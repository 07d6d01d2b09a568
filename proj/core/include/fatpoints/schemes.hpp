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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fatpoints/field_matrix.hpp"
#include "fatpoints/polyspace.hpp"
#include "fatpoints/prime_field.hpp"

namespace fatpoints {

// Where a point (or a tangent direction) is sampled. Subspaces are members
// of the canonical flag H_k = {x_{k+1} = ... = x_n = 0}, identified by k.
struct Generic {
  auto operator<=>(const Generic&) const = default;
};
struct OnSubspace {
  int dim = 0;
  auto operator<=>(const OnSubspace&) const = default;
};
struct Explicit {
  int id = 0;  // index into SchemeSpec::explicit_points
  auto operator<=>(const Explicit&) const = default;
};
// center + scale * (random vector); `center` indexes an earlier FatPoint.
struct NearCluster {
  int center = 0;
  std::int64_t scale = 1;
  auto operator<=>(const NearCluster&) const = default;
};
using Placement = std::variant<Generic, OnSubspace, Explicit, NearCluster>;

struct FatPoint {
  Placement placement = Generic{};
  int multiplicity = 1;
  std::vector<Placement> directions;
  bool operator==(const FatPoint&) const = default;
};

struct SchemeSpec {
  int n = 1;
  int d = 0;
  std::vector<FatPoint> points;
  // Declared flag members, strictly increasing, last one equal to n.
  std::vector<int> flag;
  // Integer coordinates (n+1 each) for Explicit placements.
  std::vector<std::vector<std::int64_t>> explicit_points;

  bool operator==(const SchemeSpec&) const = default;

  int max_multiplicity() const;
  int direction_count() const;
  // Some multiplicity is >= d+2, so the system is empty for trivial reasons.
  bool certainly_empty_candidate() const;
};

// Rebuilds `flag` from the subspaces referenced by placements (plus n) and
// checks every structural invariant. Throws SemanticError naming the point.
void normalize_flag(SchemeSpec& spec);
void validate(const SchemeSpec& spec);

struct SampledScheme {
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::vector<Point> points;                   // normalized
  std::vector<std::vector<Point>> directions;  // normalized, per point
};

// Deterministic in (spec, prime, seed). Requires prime > d and prime > every
// multiplicity.
SampledScheme sample(const SchemeSpec& spec, std::uint32_t prime,
                     std::uint64_t seed);

std::size_t condition_row_count(const SchemeSpec& spec);

FieldMatrix condition_matrix(const SchemeSpec& spec,
                             const SampledScheme& sampled);
FieldMatrix condition_matrix(const SchemeSpec& spec, std::uint32_t prime,
                             std::uint64_t seed);

// binom(n+d, n) - 1 - sum binom(m_i - 1 + n, n) - (number of directions).
std::int64_t virtual_dim(const SchemeSpec& spec);
std::int64_t expected_dim(const SchemeSpec& spec);

struct Trial {
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::int64_t dim = -1;
};

struct DimensionReport {
  std::int64_t virtual_dim = 0;
  std::int64_t expected = -1;
  std::int64_t computed = -1;
  bool special = false;
  // Trials disagreed; the minimum is still reported.
  bool unstable = false;
  // Over-determined system settled by a single full-rank trial.
  bool short_circuited = false;
  std::vector<std::uint32_t> primes;
  std::vector<std::uint64_t> seeds;
  std::vector<Trial> trials;
};

inline const std::vector<std::uint32_t>& default_primes() {
  static const std::vector<std::uint32_t> primes{PrimeField::kDefaultPrime,
                                                 PrimeField::kSecondaryPrime};
  return primes;
}
std::vector<std::uint64_t> default_seeds(int trials = 3);

// Computed dimension is the minimum of (kernel size - 1) over every
// (prime, seed) trial; specialization can only raise it.
DimensionReport dimension(const SchemeSpec& spec,
                          std::span<const std::uint32_t> primes,
                          std::span<const std::uint64_t> seeds);
DimensionReport dimension(const SchemeSpec& spec);

enum class AhVerdict { kSpecial, kNonspecial };
struct AhClassification {
  AhVerdict verdict = AhVerdict::kNonspecial;
  // "quadrics" for (n,2,h) with 2 <= h <= n, "sporadic" for the four
  // isolated cases, empty otherwise.
  std::string exception;
};

// Speciality of n-dimensional degree-d forms singular at h general points.
AhClassification ah_classify(int n, int d, int h);

SchemeSpec double_points(int n, int d, int h);

// True iff appending `extra` simple points lowers the computed dimension by
// exactly extra.size(). Earlier samples are unaffected by the extra points.
bool independence_check(const SchemeSpec& spec,
                        std::span<const Placement> extra,
                        std::span<const std::uint32_t> primes,
                        std::span<const std::uint64_t> seeds);

// Restriction to the flag hyperplane H_{n-1}: (kernel, trace). The kernel has
// degree d-1 with on-hyperplane multiplicities lowered by one and their
// on-hyperplane directions dropped; the trace lives on P^{n-1}.
std::pair<SchemeSpec, SchemeSpec> castelnuovo_split(const SchemeSpec& spec,
                                                    int hyperplane_dim);

struct CastelnuovoTrial {
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::int64_t total = -1;
  std::int64_t kernel = -1;
  std::int64_t trace = -1;
};

struct CastelnuovoAccounting {
  SchemeSpec kernel_spec;
  SchemeSpec trace_spec;
  std::int64_t total = -1;   // min over trials
  std::int64_t kernel = -1;  // at the minimizing trial
  std::int64_t trace = -1;
  // dim(total) <= dim(kernel) + dim(trace) + 1 in every trial.
  bool holds = true;
  std::vector<CastelnuovoTrial> trials;
};

// All three systems are evaluated on the same sampled coordinates.
CastelnuovoAccounting castelnuovo_accounting(
    const SchemeSpec& spec, int hyperplane_dim,
    std::span<const std::uint32_t> primes,
    std::span<const std::uint64_t> seeds);

bool on_hyperplane(const SchemeSpec& spec, const Placement& p);

}  // namespace fatpoints
