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
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fatpoints {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(std::int64_t n, std::int64_t k);

struct KValue {
  Rational value;
  bool integral = false;
};

// binom(n+d, n) / (n+1): the generic Waring rank when it is an integer.
KValue k_value(int n, int d);

// Largest a for which L_{n,d}(3, 2^a) is nonspecial (n >= 3, d >= 4).
BigInt triple_point_bound(int n, int d);

// Double points allowed with b simple points on a 3-space (d >= 4,
// 1 <= b < binom(d+3,3)/4 - 1, n >= 3).
BigInt simple_points_bound(int n, int d, int b);

// binom(i+d-1, i-1) - 3i/2 - i^2/2, exact (i(i+3) is always even).
BigInt a_seq(int i, int d);

struct SequenceRow {
  int i = 0;
  BigInt h;
  BigInt s;
};

// Rows i = 2..n of the tangent-direction / double-point counts used along a
// flag H_2 c ... c H_n.
struct SequenceTable {
  int n = 0;
  int d = 0;
  BigInt k;
  std::vector<SequenceRow> rows;  // rows[i - 2] describes H_i

  const BigInt& h(int i) const { return rows.at(i - 2).h; }
  const BigInt& s(int i) const { return rows.at(i - 2).s; }
  BigInt& h(int i) { return rows.at(i - 2).h; }
  BigInt& s(int i) { return rows.at(i - 2).s; }
};

// (s_{i-1}, h_{i-1}) from a(i, d): s_{i-1} is the unique t in
// [(i^2-3i-2)/2, (i^2-i-4)/2] with i | a(i,d) - t. Depends only on (i, d).
SequenceRow descend(int i, int d);

SequenceTable hs_sequences(int n, int d);

struct SequenceVerdicts {
  bool hsa = false;           // i h_{i-1} + s_{i-1} = a_i, 3 <= i <= n
  bool kernel_expdim = false; // (1): expdim of the H_{i-1}-residual is 0
  bool trace_expdim = false;  // (2): expdim of the H_{i-1} system is i-1
  bool clause_i = false;
  bool clause_ii = false;
  bool clause_iii = false;
  bool clause_iv = false;
  bool clause_v = false;
  bool clause_vi = false;

  bool all() const {
    return hsa && kernel_expdim && trace_expdim && clause_i && clause_ii &&
           clause_iii && clause_iv && clause_v && clause_vi;
  }
};

SequenceVerdicts verify_sequence_properties(const SequenceTable& t);

// Minimal j with binom(n+j, n) > h(n+1): the multiplicity at the collision
// point of h colliding double points.
int collision_limit_degree(int n, int h);

// (d-1)(d-2)/2 - sum m(m-1)/2; may be negative.
BigInt plane_genus(int d, std::span<const int> multiplicities);

}  // namespace fatpoints
