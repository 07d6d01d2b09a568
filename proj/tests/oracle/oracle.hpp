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


// Slow, obviously-correct reference implementations used to check the
// library. Nothing here shares code with fatpoints beyond the public types.

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Exponents = std::vector<unsigned>;
using Row = std::vector<std::int64_t>;
// Integer polynomial in x_0..x_n: exponent vector -> coefficient.
using Poly = std::map<Exponents, std::int64_t>;

std::int64_t mod(std::int64_t a, std::int64_t p);
std::int64_t pow_mod(std::int64_t b, std::uint64_t e, std::int64_t p);
std::int64_t inv_mod(std::int64_t a, std::int64_t p);  // extended Euclid

// Degree-d monomials in n+1 variables, by brute-force filtering of the box
// {0..d}^{n+1}; ascending lexicographic order.
std::vector<Exponents> monomials(int n, int d);

Poly monomial(const Exponents& e);
// d/dx_var, coefficients kept as integers.
Poly differentiate(const Poly& f, std::size_t var);
std::int64_t eval(const Poly& f, const std::vector<std::int64_t>& pt, std::int64_t p);

// One row per derivative of order mult-1 (taken one variable at a time),
// columns indexed by monomials(n, d).
std::vector<Row> fat_point_rows(int n, int d, const std::vector<std::int64_t>& pt,
                                int mult, std::int64_t p);
// Taylor formula: sum_{|b|=m} (d^b f)(pt) v^b / b!  for every monomial f.
Row tangent_row(int n, int d, const std::vector<std::int64_t>& pt,
                const std::vector<std::int64_t>& v, int m, std::int64_t p);

std::size_t rank_mod(std::vector<Row> rows, std::int64_t p);
std::size_t rank_rational(const std::vector<Row>& rows);

// rows x cols matrix of rank exactly r: a unit lower-trapezoidal L
// (rows x r) times an upper-trapezoidal U (r x cols) with nonzero pivots.
std::vector<Row> matrix_of_rank(std::size_t rows, std::size_t cols, std::size_t r,
                                std::int64_t p, std::mt19937_64& rng);

struct NaiveCensus {
  std::uint64_t domain = 0;
  std::uint64_t base_points = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;  // fiber size -> count
};
// Enumerates P^n(F_p) as normalized vectors and buckets the normalized
// images in a std::map.
NaiveCensus census(const std::vector<Poly>& forms, int n, std::int64_t p);

boost::multiprecision::cpp_int binom(unsigned n, unsigned k);  // Pascal

}  // namespace oracle
