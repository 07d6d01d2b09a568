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


#include <random>

#include <gtest/gtest.h>

#include "fatpoints/error.hpp"
#include "fatpoints/field_matrix.hpp"
#include "fatpoints/prime_field.hpp"
#include "oracle.hpp"

namespace fatpoints {
namespace {

TEST(PrimeField, RejectsNonPrimeAndEvenModuli) {
  EXPECT_THROW(PrimeField(1), InvalidArgument);
  EXPECT_THROW(PrimeField(2), InvalidArgument);
  EXPECT_THROW(PrimeField(32001), InvalidArgument);
  EXPECT_NO_THROW(PrimeField(32003));
}

TEST(PrimeField, PrimalityMatchesTrialDivision) {
  auto slow = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
      if (n % q == 0) return false;
    return true;
  };
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), slow(n)) << n;
  EXPECT_TRUE(is_prime(18446744073709551557ull));  // largest 64-bit prime
  EXPECT_FALSE(is_prime(3215031751ull));           // strong pseudoprime to 2,3,5,7
}

TEST(PrimeField, ArithmeticAgreesWithOracle) {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {3u, 499u, 32003u, 65521u, 2147483647u}) {
    PrimeField f(p);
    std::uniform_int_distribution<std::int64_t> any(-(1LL << 40), 1LL << 40);
    for (int t = 0; t < 200; ++t) {
      const std::int64_t a = any(rng), b = any(rng);
      const Residue ra = f.reduce(a), rb = f.reduce(b);
      EXPECT_EQ(ra, oracle::mod(a, p));
      EXPECT_EQ(f.add(ra, rb), oracle::mod(a + b, p));
      EXPECT_EQ(f.sub(ra, rb), oracle::mod(a - b, p));
      EXPECT_EQ(f.mul(ra, rb), static_cast<Residue>(static_cast<std::uint64_t>(ra) * rb % p));
      if (ra != 0) {
        EXPECT_EQ(f.mul(ra, f.inv(ra)), 1u);
        EXPECT_EQ(f.inv(ra), oracle::inv_mod(ra, p));
      }
    }
    EXPECT_THROW(f.inv(0), InvalidArgument);
    EXPECT_EQ(f.pow(2, p - 1), 1u);  // Fermat
  }
}

TEST(PrimeField, InverseTable) {
  PrimeField f(499);
  const auto t = inverse_table(f);
  ASSERT_EQ(t.size(), 499u);
  EXPECT_EQ(t[0], 0u);
  for (Residue a = 1; a < 499; ++a) EXPECT_EQ(f.mul(a, t[a]), 1u);
}

std::vector<Vector> to_vectors(const std::vector<oracle::Row>& rows) {
  std::vector<Vector> out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

TEST(FieldMatrix, RankOfLUProductsIsExact) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {32003u, 65521u, 5u}) {
    PrimeField f(p);
    for (int t = 0; t < 60; ++t) {
      const std::size_t rows = 1 + rng() % 25, cols = 1 + rng() % 25;
      const std::size_t r = rng() % (std::min(rows, cols) + 1);
      const auto m = oracle::matrix_of_rank(rows, cols, r, p, rng);
      const auto fm = FieldMatrix::from_rows(f, to_vectors(m), cols);
      EXPECT_EQ(rank(fm), r);
      EXPECT_EQ(oracle::rank_mod(m, p), r);
      const auto ker = kernel_basis(fm);
      EXPECT_EQ(ker.size(), cols - r);
      for (const auto& v : ker) {
        for (Residue x : fm.multiply(v)) EXPECT_EQ(x, 0u);
      }
    }
  }
}

TEST(FieldMatrix, RrefShape) {
  PrimeField f(7);
  const auto m = FieldMatrix::from_rows(f, {{2, 4, 6}, {1, 2, 3}, {0, 1, 5}});
  const auto r = rref(m);
  EXPECT_EQ(r, FieldMatrix::from_rows(f, {{1, 0, -7}, {0, 1, 5}, {0, 0, 0}}));
  EXPECT_EQ(rank(m), 2u);
  EXPECT_EQ(rref(r), r);
}

TEST(FieldMatrix, KernelVectorsAreNormalizedAndIndependent) {
  PrimeField f(32003);
  const auto m = FieldMatrix::from_rows(f, {{1, 1, 1, 1}});
  const auto ker = kernel_basis(m);
  ASSERT_EQ(ker.size(), 3u);
  std::vector<oracle::Row> rows;
  for (const auto& v : ker) {
    const auto first = std::find_if(v.begin(), v.end(), [](Residue x) { return x != 0; });
    ASSERT_NE(first, v.end());
    EXPECT_EQ(*first, 1u);
    rows.emplace_back(v.begin(), v.end());
  }
  EXPECT_EQ(oracle::rank_mod(rows, 32003), 3u);
}

TEST(FieldMatrix, EmptyShapes) {
  PrimeField f(3);
  FieldMatrix none(f, 0, 4);
  EXPECT_EQ(rank(none), 0u);
  EXPECT_EQ(kernel_basis(none).size(), 4u);
  FieldMatrix wide(f, 3, 0);
  EXPECT_EQ(rank(wide), 0u);
  EXPECT_TRUE(kernel_basis(wide).empty());
  EXPECT_EQ(FieldMatrix::identity(f, 5).rows(), 5u);
  EXPECT_EQ(rank(FieldMatrix::identity(f, 5)), 5u);
}

TEST(FieldMatrix, SmallIntegerMatricesMatchRationalRank) {
  // For p much larger than the entries' minors the modular rank equals the
  // rational rank.
  std::mt19937_64 rng(3);
  PrimeField f(2147483647u);
  for (int t = 0; t < 50; ++t) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    std::vector<oracle::Row> m(rows, oracle::Row(cols));
    for (auto& r : m)
      for (auto& x : r) x = static_cast<std::int64_t>(rng() % 5) - 2;
    // Force a dependency half the time.
    if (rows > 1 && t % 2 == 0) m.back() = m.front();
    std::vector<Vector> rows_f;
    for (auto& r : m) {
      Vector v;
      for (auto x : r) v.push_back(f.reduce(x));
      rows_f.push_back(v);
    }
    EXPECT_EQ(rank(FieldMatrix::from_rows(f, rows_f, cols)), oracle::rank_rational(m));
  }
}

}  // namespace
}  // namespace fatpoints
