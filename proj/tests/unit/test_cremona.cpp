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


#include <gtest/gtest.h>

#include "fatpoints/cremona.hpp"
#include "fatpoints/error.hpp"
#include "fatpoints/spec_text.hpp"
#include "oracle.hpp"

namespace fatpoints {
namespace {

std::vector<oracle::Poly> polys(const RationalMap& m) {
  std::vector<oracle::Poly> out;
  for (const Vector& f : m.forms) {
    oracle::Poly p;
    for (std::size_t j = 0; j < f.size(); ++j)
      if (f[j] != 0) p[(*m.basis)[j].exponents] = f[j];
    out.push_back(p);
  }
  return out;
}

void expect_same_census(const RationalMap& m) {
  const auto want = oracle::census(polys(m), m.n, m.prime);
  for (unsigned threads : {1u, 3u}) {
    CensusOptions o;
    o.threads = threads;
    const FiberCensus got = fiber_census(m, o);
    EXPECT_EQ(got.domain_size, want.domain);
    EXPECT_EQ(got.base_points, want.base_points);
    EXPECT_EQ(got.histogram, want.histogram);
    std::uint64_t mass = 0, image = 0;
    for (const auto& [size, count] : got.histogram) {
      mass += size * count;
      image += count;
    }
    EXPECT_EQ(mass, got.domain_size - got.base_points);
    EXPECT_EQ(image, got.image_size);
    EXPECT_EQ(got.unique_points, got.histogram.count(1) ? got.histogram.at(1) : 0);
  }
}

RationalMap handmade(int n, int d, std::uint32_t p, std::vector<std::vector<std::pair<MultiIndex, Residue>>> terms) {
  RationalMap m;
  m.n = n;
  m.d = d;
  m.prime = p;
  m.basis = monomial_basis(n, d);
  for (const auto& t : terms) {
    Vector f(m.basis->size(), 0);
    for (const auto& [e, c] : t) f[m.basis->index_of(e)] = c;
    m.forms.push_back(f);
  }
  return m;
}

TEST(Census, IdentityMap) {
  const auto m = handmade(2, 1, 13, {{{MultiIndex{{1, 0, 0}}, 1}},
                                     {{MultiIndex{{0, 1, 0}}, 1}},
                                     {{MultiIndex{{0, 0, 1}}, 1}}});
  const FiberCensus c = fiber_census(m);
  EXPECT_EQ(c.domain_size, 13u * 13 + 13 + 1);
  EXPECT_EQ(c.histogram, (std::map<std::uint64_t, std::uint64_t>{{1, 183}}));
  EXPECT_EQ(c.verdict.kind, VerdictKind::kBirational);
  expect_same_census(m);
}

TEST(Census, StandardQuadraticInvolution) {
  // (x1 x2 : x0 x2 : x0 x1): base points are the three coordinate points.
  const auto m = handmade(2, 2, 31, {{{MultiIndex{{0, 1, 1}}, 1}},
                                     {{MultiIndex{{1, 0, 1}}, 1}},
                                     {{MultiIndex{{1, 1, 0}}, 1}}});
  const FiberCensus c = fiber_census(m);
  EXPECT_EQ(c.base_points, 3u);
  // Each coordinate line minus its two base points collapses to one point.
  EXPECT_EQ(c.histogram.at(30), 3u);
  EXPECT_EQ(c.histogram.at(1), 30u * 30);
  expect_same_census(m);
}

TEST(Census, MatchesNaiveEnumerationOnSampledMaps) {
  for (const char* t : {"L(2,5;2^6)", "L(3,3;2^4)", "L(2,2;2)", "L(1,5;2^2)", "L(3,2;2^2)"}) {
    const SchemeSpec spec = parse_spec(t);
    for (std::uint32_t p : {31u, 37u}) {
      for (std::uint64_t seed = 1; seed < 20; ++seed) {
        try {
          expect_same_census(map_from_system(spec, p, seed));
          break;
        } catch (const NotACremonaCandidate&) {
        }
      }
    }
  }
}

TEST(Census, SquaringMapHasDegreeTwo) {
  const auto m = handmade(1, 2, 101, {{{MultiIndex{{2, 0}}, 1}}, {{MultiIndex{{0, 2}}, 1}}});
  const FiberCensus c = fiber_census(m);
  EXPECT_EQ(c.histogram, (std::map<std::uint64_t, std::uint64_t>{{1, 2}, {2, 50}}));
  EXPECT_EQ(c.verdict, (Verdict{VerdictKind::kFinite, 2}));
  expect_same_census(m);
}

TEST(Census, BudgetSuggestsASmallerPrime) {
  const RationalMap m = map_from_system(parse_spec("L(3,3;2^4)"), 32003, 1);
  try {
    fiber_census(m);
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_GT(e.suggested_prime(), 3u);
    EXPECT_LT(e.suggested_prime(), 32003u);
    EXPECT_TRUE(is_prime(e.suggested_prime()));
    EXPECT_LE(static_cast<double>(projective_point_count(e.suggested_prime(), 3)) * 20, 1e10);
  }
}

TEST(Census, PointCount) {
  EXPECT_EQ(projective_point_count(31, 4), 31u * 31 * 31 * 31 + 31 * 31 * 31 + 31 * 31 + 31 + 1);
  EXPECT_EQ(projective_point_count(499, 1), 500u);
  EXPECT_THROW(projective_point_count(65521, 5), InvalidArgument);
}

FiberCensus synthetic(std::uint32_t p, std::uint64_t domain,
                      std::map<std::uint64_t, std::uint64_t> hist) {
  FiberCensus c;
  c.prime = p;
  c.domain_size = domain;
  c.histogram = std::move(hist);
  for (const auto& [s, k] : c.histogram) c.image_size += k;
  c.unique_points = c.histogram.count(1) ? c.histogram.at(1) : 0;
  std::uint64_t mapped = 0;
  for (const auto& [s, k] : c.histogram) mapped += s * k;
  c.fraction_unique = mapped ? static_cast<double>(c.unique_points) / mapped : 0.0;
  return c;
}

TEST(Census, ClassifyThresholds) {
  EXPECT_EQ(classify(synthetic(31, 993, {{1, 990}, {3, 1}})).kind, VerdictKind::kBirational);
  EXPECT_EQ(classify(synthetic(31, 993, {{31, 32}})).kind, VerdictKind::kFiberType);
  const Verdict two = classify(synthetic(499, 250000, {{2, 100000}, {1, 40000}}));
  EXPECT_EQ(two.kind, VerdictKind::kFinite);
  EXPECT_EQ(two.degree, 2u);
  EXPECT_EQ(to_string(two), "finite(2)");
  EXPECT_EQ(classify(synthetic(499, 250000, {{1, 50000}, {2, 50000}, {3, 30000}})).kind,
            VerdictKind::kInconclusive);
}

TEST(Cremona, MapNeedsAnNDimensionalSystem) {
  EXPECT_THROW(map_from_system(parse_spec("L(2,4;2^3)"), 32003, 1), NotACremonaCandidate);
  const RationalMap m = map_from_system(parse_spec("L(3,3;2^4)"), 127, 1);
  EXPECT_EQ(m.forms.size(), 4u);
  EXPECT_EQ(m.basis->size(), 20u);
}

TEST(Cremona, QuadricRank) {
  const PrimeField f(31);
  const auto basis = monomial_basis(3, 2);  // x0^2 x0x1 x0x2 x0x3 x1^2 x1x2 x1x3 x2^2 x2x3 x3^2
  Form q{basis, Vector(basis->size(), 0)};
  q.coeffs[basis->index_of(MultiIndex{{1, 1, 0, 0}})] = 1;  // x0 x1
  EXPECT_EQ(quadric_rank(f, q), 2u);
  q.coeffs[basis->index_of(MultiIndex{{0, 0, 2, 0}})] = 5;
  EXPECT_EQ(quadric_rank(f, q), 3u);
  q.coeffs[basis->index_of(MultiIndex{{0, 0, 0, 2}})] = 1;
  EXPECT_EQ(quadric_rank(f, q), 4u);
}

TEST(Cremona, DefaultCensusPrimes) {
  EXPECT_EQ(census_primes(1), (std::vector<std::uint32_t>{499, 503}));
  EXPECT_EQ(census_primes(2), (std::vector<std::uint32_t>{499, 503}));
  EXPECT_EQ(census_primes(3), (std::vector<std::uint32_t>{127, 131}));
  EXPECT_EQ(census_primes(4), (std::vector<std::uint32_t>{31, 61}));
  EXPECT_EQ(census_primes(5), (std::vector<std::uint32_t>{31, 37}));
}

TEST(Cremona, ClassifySmallSystems) {
  const auto bin = classify_system(parse_spec("L(1,5;2^2)"), census_primes(1));
  EXPECT_TRUE(bin.agree);
  EXPECT_EQ(bin.verdict.kind, VerdictKind::kBirational);
  const auto conic = classify_system(parse_spec("L(2,2;2)"), {31, 37});
  EXPECT_TRUE(conic.agree);
  EXPECT_EQ(conic.verdict.kind, VerdictKind::kFiberType);  // projection from a point
  const auto quad = classify_system(parse_spec("L(2,2;1^3)"), {31, 37});
  EXPECT_EQ(quad.verdict.kind, VerdictKind::kBirational);
}

TEST(Cremona, IdentifiabilityWithoutCensus) {
  for (int k = 1; k <= 5; ++k) {
    const auto r = identifiability_verdict(1, 2 * k - 1, false);
    EXPECT_EQ(r.kind, Identifiability::kIdentifiable);
    EXPECT_EQ(r.rank, k);
  }
  EXPECT_EQ(identifiability_verdict(2, 5, false).rank, 7);
  EXPECT_EQ(identifiability_verdict(3, 3, false).rank, 5);
  EXPECT_EQ(identifiability_verdict(4, 4, false).kind, Identifiability::kNotIdentifiable);
  EXPECT_EQ(identifiability_verdict(3, 4, false).kind, Identifiability::kNonPerfect);
  EXPECT_EQ(identifiability_verdict(2, 4, false).kind, Identifiability::kNotIdentifiable);
  EXPECT_EQ(identifiability_verdict(1, 4, false).kind, Identifiability::kNonPerfect);
  EXPECT_EQ(identifiability_verdict(2, 2, false).kind, Identifiability::kNotIdentifiable);
  EXPECT_EQ(to_string(Identifiability::kNonPerfect), "non-perfect");
}

}  // namespace
}  // namespace fatpoints
