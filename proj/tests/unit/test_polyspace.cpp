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
#include "fatpoints/polyspace.hpp"
#include "oracle.hpp"

namespace fatpoints {
namespace {

std::vector<std::int64_t> wide(const Point& p) { return {p.begin(), p.end()}; }

Point random_point(std::mt19937_64& rng, int n, std::uint32_t p) {
  Point x(n + 1);
  for (auto& c : x) c = static_cast<Residue>(rng() % p);
  x[0] = 1 + static_cast<Residue>(rng() % (p - 1));
  return x;
}

TEST(MonomialBasis, SizeOrderAndIndex) {
  for (int n = 1; n <= 5; ++n) {
    for (int d = 0; d <= 6; ++d) {
      const MonomialBasis b(n, d);
      ASSERT_EQ(b.size(), oracle::binom(n + d, n).convert_to<std::size_t>());
      ASSERT_EQ(b.size(), oracle::monomials(n, d).size());
      for (std::size_t j = 0; j < b.size(); ++j) {
        EXPECT_EQ(b[j].degree(), static_cast<unsigned>(d));
        EXPECT_EQ(b.index_of(b[j]), j);
        if (j > 0) {
          EXPECT_GT(b[j - 1].exponents, b[j].exponents);
        }
      }
    }
  }
  const MonomialBasis b(2, 2);
  EXPECT_EQ(b[0].exponents, (std::vector<unsigned>{2, 0, 0}));
  EXPECT_EQ(b[5].exponents, (std::vector<unsigned>{0, 0, 2}));
  EXPECT_THROW(b.index_of(MultiIndex{{1, 0, 0}}), InvalidArgument);
  EXPECT_THROW(b.index_of(MultiIndex{{1, 1}}), InvalidArgument);
  EXPECT_EQ(monomial_basis(2, 2)->order(), b.order());
}

TEST(Polyspace, DerivativeRowsMatchSymbolicDifferentiation) {
  std::mt19937_64 rng(5);
  const std::uint32_t p = 32003;
  PrimeField f(p);
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 5; ++d) {
      const MonomialBasis basis(n, d);
      const auto order = oracle::monomials(n, d);
      for (int mult = 1; mult <= d + 1; ++mult) {
        const Point pt = random_point(rng, n, p);
        const auto want = oracle::fat_point_rows(n, d, wide(pt), mult, p);
        const auto alphas = oracle::monomials(n, mult - 1);
        ASSERT_EQ(want.size(), alphas.size());
        for (std::size_t r = 0; r < alphas.size(); ++r) {
          const Vector got = derivative_row(f, basis, MultiIndex{alphas[r]}, pt);
          for (std::size_t c = 0; c < order.size(); ++c) {
            EXPECT_EQ(got[basis.index_of(MultiIndex{order[c]})],
                      static_cast<Residue>(want[r][c]));
          }
        }
        const auto all = multiplicity_rows(f, basis, pt, mult);
        EXPECT_EQ(all.size(), alphas.size());
      }
    }
  }
}

TEST(Polyspace, TangentRowMatchesTaylorFormula) {
  std::mt19937_64 rng(9);
  const std::uint32_t p = 65521;
  PrimeField f(p);
  for (int n = 1; n <= 3; ++n) {
    for (int d = 2; d <= 5; ++d) {
      const MonomialBasis basis(n, d);
      const auto order = oracle::monomials(n, d);
      for (int m = 1; m <= d; ++m) {
        const Point pt = random_point(rng, n, p);
        const Point v = random_point(rng, n, p);
        if (proportional(f, pt, v)) continue;
        const auto want = oracle::tangent_row(n, d, wide(pt), wide(v), m, p);
        const Vector got = tangent_direction_row(f, basis, pt, v, m);
        for (std::size_t c = 0; c < order.size(); ++c) {
          EXPECT_EQ(got[basis.index_of(MultiIndex{order[c]})], static_cast<Residue>(want[c]));
        }
      }
    }
  }
}

TEST(Polyspace, TangentRowRejectsDegenerateInput) {
  PrimeField f(7);
  const MonomialBasis basis(2, 3);
  const Point pt{1, 2, 3};
  EXPECT_THROW(tangent_direction_row(f, basis, pt, Point{2, 4, 6}, 2), InvalidArgument);
  EXPECT_THROW(tangent_direction_row(f, basis, pt, Point{0, 1, 0}, 7), InvalidArgument);
  EXPECT_THROW(derivative_row(f, MonomialBasis(2, 9), MultiIndex{{7, 0, 0}}, pt),
               InvalidArgument);
}

TEST(Polyspace, EvalAndNormalize) {
  PrimeField f(101);
  const auto basis = monomial_basis(1, 2);  // x0^2, x0 x1, x1^2
  Form q{basis, {1, 0, 100}};               // x0^2 - x1^2
  EXPECT_EQ(eval_form(f, q, Point{3, 3}), 0u);
  EXPECT_EQ(eval_form(f, q, Point{2, 1}), 3u);
  EXPECT_EQ(eval_monomial(f, MultiIndex{{1, 1}}, Point{4, 5}), 20u);
  EXPECT_EQ(normalize(f, Point{0, 5, 10}), (Point{0, 1, 2}));
  EXPECT_THROW(normalize(f, Point{0, 0}), InvalidArgument);
  EXPECT_TRUE(proportional(f, Point{1, 2}, Point{3, 6}));
  EXPECT_FALSE(proportional(f, Point{1, 2}, Point{3, 5}));
}

TEST(Polyspace, EulerRelationMakesLowerOrderRowsRedundant) {
  // Rows of order m-1 already span the rows of order m-2 when p > d.
  std::mt19937_64 rng(1);
  PrimeField f(32003);
  const MonomialBasis basis(3, 4);
  const Point pt = random_point(rng, 3, 32003);
  auto top = multiplicity_rows(f, basis, pt, 3);
  const std::size_t r_top = rank(FieldMatrix::from_rows(f, top, basis.size()));
  for (const auto& row : multiplicity_rows(f, basis, pt, 2)) top.push_back(row);
  EXPECT_EQ(rank(FieldMatrix::from_rows(f, top, basis.size())), r_top);
  EXPECT_EQ(r_top, 10u);
}

}  // namespace
}  // namespace fatpoints
