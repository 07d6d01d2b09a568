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


// Randomized invariants: semicontinuity, text round trips, restriction
// accounting and fiber conservation.

#include <random>

#include <gtest/gtest.h>

#include "fatpoints/cremona.hpp"
#include "fatpoints/schemes.hpp"
#include "fatpoints/spec_text.hpp"
#include "generators.hpp"
#include "oracle.hpp"

namespace fatpoints {
namespace {

TEST(Properties, ComputedNeverBelowExpected) {
  std::mt19937_64 rng(20260101);
  int special = 0;
  for (int t = 0; t < 500; ++t) {
    const SchemeSpec spec = oracle::random_spec(rng);
    const auto r = dimension(spec);
    ASSERT_GE(r.computed, r.expected) << print_spec(spec);
    EXPECT_EQ(r.expected, std::max<std::int64_t>(virtual_dim(spec), -1));
    EXPECT_EQ(r.special, r.computed > r.expected);
    special += r.special;
  }
  EXPECT_GT(special, 0);  // the generator does reach special systems
}

SchemeSpec random_text_spec(std::mt19937_64& rng) {
  SchemeSpec s = oracle::random_spec(rng);
  // Sprinkle explicit points and clusters the flag generator never makes.
  if (!s.points.empty() && rng() % 3 == 0) {
    std::vector<std::int64_t> c(s.n + 1);
    for (auto& x : c) x = static_cast<std::int64_t>(rng() % 21) - 10;
    c[0] = 1;
    s.explicit_points.push_back(c);
    s.points.push_back(FatPoint{Explicit{0}, 2, {}});
  }
  if (!s.points.empty() && rng() % 3 == 0) {
    s.points.push_back(FatPoint{NearCluster{0, static_cast<std::int64_t>(rng() % 9) - 4}, 1, {}});
    if (std::get<NearCluster>(s.points.back().placement).scale == 0)
      std::get<NearCluster>(s.points.back().placement).scale = 1;
  }
  normalize_flag(s);
  return s;
}

TEST(Properties, TextRoundTrip) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    const SchemeSpec s = random_text_spec(rng);
    const std::string text = print_spec(s);
    const SchemeSpec back = parse_spec(text);
    EXPECT_EQ(back, s) << text;
    EXPECT_EQ(print_spec(back), text);
    EXPECT_EQ(spec_from_json(spec_to_json(s)), s) << text;
  }
}

TEST(Properties, RestrictionAccounting) {
  std::mt19937_64 rng(4242);
  oracle::SpecLimits lim;
  lim.n_max = 4;
  lim.d_max = 5;
  int done = 0;
  while (done < 20) {
    SchemeSpec s = oracle::random_spec(rng, lim);
    if (s.n < 2 || s.d < 2) continue;
    // Put a couple of points on the hyperplane so the split is not trivial.
    for (std::size_t i = 0; i < s.points.size() && i < 2; ++i) {
      if (std::holds_alternative<Generic>(s.points[i].placement))
        s.points[i].placement = OnSubspace{s.n - 1};
    }
    normalize_flag(s);
    const auto a = castelnuovo_accounting(s, s.n - 1, default_primes(), default_seeds());
    EXPECT_TRUE(a.holds) << print_spec(s);
    for (const auto& t : a.trials) EXPECT_LE(t.total, t.kernel + t.trace + 1);
    EXPECT_EQ(a.kernel_spec.d, s.d - 1);
    EXPECT_EQ(a.trace_spec.n, s.n - 1);
    ++done;
  }
}

TEST(Properties, FiberConservationOnRandomMaps) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 30; ++t) {
    RationalMap m;
    m.n = 1 + static_cast<int>(rng() % 2);
    m.d = 1 + static_cast<int>(rng() % 3);
    m.prime = m.n == 1 ? 101 : 23;
    m.basis = monomial_basis(m.n, m.d);
    std::vector<oracle::Poly> polys;
    for (int i = 0; i <= m.n; ++i) {
      Vector f(m.basis->size());
      oracle::Poly p;
      for (std::size_t j = 0; j < f.size(); ++j) {
        f[j] = rng() % 2 ? static_cast<Residue>(rng() % m.prime) : 0;
        if (f[j]) p[(*m.basis)[j].exponents] = f[j];
      }
      m.forms.push_back(f);
      polys.push_back(p);
    }
    const FiberCensus c = fiber_census(m);
    std::uint64_t mass = 0;
    for (const auto& [size, count] : c.histogram) mass += size * count;
    EXPECT_EQ(mass + c.base_points, c.domain_size);
    const auto want = oracle::census(polys, m.n, m.prime);
    EXPECT_EQ(c.histogram, want.histogram);
    EXPECT_EQ(c.base_points, want.base_points);
  }
}

}  // namespace
}  // namespace fatpoints
