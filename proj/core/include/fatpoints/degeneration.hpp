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
#include <vector>

#include "fatpoints/schemes.hpp"

namespace fatpoints {

// n+1 double points colliding into a triple point with binom(n+1, 2)
// tangent directions: both sides evaluated on the same sample.
struct CollisionExperiment {
  int n = 0;
  int d = 0;
  int h = 0;
  int predicted_multiplicity = 0;
  std::int64_t generic_dim = -1;  // n+1 double points
  std::int64_t limit_dim = -1;    // triple point plus directions
  std::int64_t expected_dim = -1;
  bool degree_identity = false;   // (n+1)^2 = binom(n+2,2) + binom(n+1,2)
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  SchemeSpec generic_side;
  SchemeSpec limit_side;
  std::string directions;  // how the direction set was realized
};

CollisionExperiment collision1_check(int n, int d, std::uint32_t prime,
                                     std::uint64_t seed);

bool degree_identity_holds(int n);

struct IndipReport {
  int n = 0;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;       // seed actually used
  int resamples = 0;            // degenerate samples skipped
  std::size_t points = 0;       // binom(n+1, 2)
  std::size_t quadric_rank = 0; // rank of the quadric evaluation matrix
  bool independent = false;     // quadric_rank == points
  std::size_t triples = 0;
  bool triples_collinear = false;
};

// A = n+1 random points off R = {x_n = 0}; B = the binom(n+1,2) points
// <a_i, a_j> n R. Checks B imposes independent conditions on quadrics of R
// and that every triple of A yields three collinear points of B.
IndipReport indip_check(int n, std::uint32_t prime, std::uint64_t seed);

struct LimitReport {
  int n = 0;
  int d = 0;
  int h = 0;
  int mu = 0;
  std::int64_t scheme_length = 0;  // h (n+1)
  std::int64_t point_length = 0;   // binom(mu - 1 + n, n), a mu-fold point
  bool exact = false;              // equal lengths: the limit is the point
  std::int64_t generic_dim = -1;   // L_{n,d}(2^h)
  std::int64_t limit_dim = -1;     // L_{n,d}(mu)
  // limit_dim >= generic_dim: the limit scheme contains the mu-fold point.
  bool dims_consistent = false;
  std::string statement;
};

LimitReport limit_multiplicity_check(int n, int d, int h,
                                     std::span<const std::uint32_t> primes,
                                     std::span<const std::uint64_t> seeds);

}  // namespace fatpoints
