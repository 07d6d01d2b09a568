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

#include "fatpoints/degeneration.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "fatpoints/error.hpp"
#include "fatpoints/numerology.hpp"

namespace fatpoints {

namespace {

constexpr int kMaxResamples = 32;

// n+1 points of P^n drawn by the scheme sampler, normalized.
std::vector<Point> generic_points(int n, int count, std::uint32_t prime, std::uint64_t seed) {
  SchemeSpec s;
  s.n = n;
  s.d = 1;
  s.flag = {n};
  s.points.assign(static_cast<std::size_t>(count), FatPoint{Generic{}, 1, {}});
  return sample(s, prime, seed).points;
}

std::vector<std::int64_t> as_integers(const Point& p) {
  return {p.begin(), p.end()};
}

}  // namespace

bool degree_identity_holds(int n) {
  return BigInt(n + 1) * (n + 1) == binomial(n + 2, 2) + binomial(n + 1, 2);
}

CollisionExperiment collision1_check(int n, int d, std::uint32_t prime, std::uint64_t seed) {
  if (n < 2 || d < 3) throw InvalidArgument("collision experiment needs n >= 2 and d >= 3");
  const PrimeField f(prime);
  CollisionExperiment e;
  e.n = n;
  e.d = d;
  e.h = n + 1;
  e.predicted_multiplicity = collision_limit_degree(n, n + 1);
  e.degree_identity = degree_identity_holds(n);
  e.prime = prime;

  for (int attempt = 0;; ++attempt) {
    if (attempt == kMaxResamples) throw Error("no usable sample for the collision experiment");
    e.seed = seed + static_cast<std::uint64_t>(attempt);
    const auto a = generic_points(n, n + 1, prime, e.seed);
    // Work in the chart x_0 = 1; points are normalized, so a[i][0] is 0 or 1.
    bool usable = true;
    for (const Point& p : a) usable = usable && p[0] == 1;
    if (!usable) continue;

    SchemeSpec A;
    A.n = n;
    A.d = d;
    for (const Point& p : a) A.explicit_points.push_back(as_integers(p));
    for (int i = 0; i <= n; ++i) A.points.push_back(FatPoint{Explicit{i}, 2, {}});
    normalize_flag(A);

    // Triple point at a_0; the direction of <a_i, a_j> is u_j - u_i with
    // u_i = a_i - a_0 in the affine chart (u_0 = 0).
    SchemeSpec B;
    B.n = n;
    B.d = d;
    B.explicit_points.push_back(as_integers(a[0]));
    FatPoint triple{Explicit{0}, 3, {}};
    for (int i = 0; i <= n && usable; ++i) {
      for (int j = i + 1; j <= n && usable; ++j) {
        Point q(a[0]);
        bool moved = false;
        for (int c = 1; c <= n; ++c) {
          const auto cc = static_cast<std::size_t>(c);
          const Residue w = f.sub(a[static_cast<std::size_t>(j)][cc], a[static_cast<std::size_t>(i)][cc]);
          moved = moved || w != 0;
          q[cc] = f.add(q[cc], w);
        }
        if (!moved) usable = false;
        triple.directions.push_back(Explicit{static_cast<int>(B.explicit_points.size())});
        B.explicit_points.push_back(as_integers(q));
      }
    }
    if (!usable) continue;
    B.points.push_back(std::move(triple));
    normalize_flag(B);

    const std::array<std::uint32_t, 1> primes{prime};
    const std::array<std::uint64_t, 1> seeds{e.seed};
    e.generic_dim = dimension(A, primes, seeds).computed;
    e.limit_dim = dimension(B, primes, seeds).computed;
    e.expected_dim = expected_dim(A);
    e.generic_side = std::move(A);
    e.limit_side = std::move(B);
    e.directions = "triple point at a_0 with the " + std::to_string((n + 1) * n / 2) +
                   " directions u_j - u_i (0 <= i < j <= n), u_i = a_i - a_0 in the chart x_0 = 1";
    return e;
  }
}

IndipReport indip_check(int n, std::uint32_t prime, std::uint64_t seed) {
  if (n < 2) throw InvalidArgument("independence experiment needs n >= 2");
  const PrimeField f(prime);
  IndipReport r;
  r.n = n;
  r.prime = prime;
  const auto un = static_cast<std::size_t>(n);

  for (int attempt = 0;; ++attempt) {
    if (attempt == kMaxResamples) throw Error("no usable sample for the independence experiment");
    r.seed = seed + static_cast<std::uint64_t>(attempt);
    r.resamples = attempt;
    const auto a = generic_points(n, n + 1, prime, r.seed);
    bool usable = true;
    for (const Point& p : a) usable = usable && p[un] != 0;  // off R = {x_n = 0}
    if (!usable) continue;

    // b_ij = <a_i, a_j> meet R, written in the coordinates x_0..x_{n-1} of R.
    std::vector<std::vector<Point>> b(un + 1, std::vector<Point>(un + 1));
    std::vector<Point> all;
    for (std::size_t i = 0; i <= un && usable; ++i) {
      for (std::size_t j = i + 1; j <= un && usable; ++j) {
        Point q(un);
        for (std::size_t c = 0; c < un; ++c) {
          q[c] = f.sub(f.mul(a[j][un], a[i][c]), f.mul(a[i][un], a[j][c]));
        }
        if (std::all_of(q.begin(), q.end(), [](Residue x) { return x == 0; })) {
          usable = false;
          break;
        }
        q = normalize(f, q);
        for (const Point& o : all) usable = usable && o != q;
        b[i][j] = q;
        all.push_back(q);
      }
    }
    if (!usable) continue;

    r.points = all.size();
    const auto quad = monomial_basis(n - 1, 2);
    FieldMatrix m(f, 0, quad->size());
    const MultiIndex zero{std::vector<unsigned>(un, 0)};
    for (const Point& q : all) m.append_row(derivative_row(f, *quad, zero, q));
    r.quadric_rank = rank(m);
    r.independent = r.quadric_rank == r.points;

    r.triples = 0;
    r.triples_collinear = true;
    for (std::size_t i = 0; i <= un; ++i) {
      for (std::size_t j = i + 1; j <= un; ++j) {
        for (std::size_t k = j + 1; k <= un; ++k) {
          std::vector<Vector> rows{b[i][j], b[i][k], b[j][k]};
          ++r.triples;
          if (rank(FieldMatrix::from_rows(f, rows, un)) > 2) r.triples_collinear = false;
        }
      }
    }
    return r;
  }
}

LimitReport limit_multiplicity_check(int n, int d, int h, std::span<const std::uint32_t> primes,
                                     std::span<const std::uint64_t> seeds) {
  LimitReport r;
  r.n = n;
  r.d = d;
  r.h = h;
  r.mu = collision_limit_degree(n, h);
  r.scheme_length = static_cast<std::int64_t>(h) * (n + 1);
  r.point_length = binomial(r.mu - 1 + n, n).convert_to<std::int64_t>();
  r.exact = r.scheme_length == r.point_length;

  r.generic_dim = dimension(double_points(n, d, h), primes, seeds).computed;
  SchemeSpec fat;
  fat.n = n;
  fat.d = d;
  fat.flag = {n};
  fat.points.push_back(FatPoint{Generic{}, r.mu, {}});
  r.limit_dim = dimension(fat, primes, seeds).computed;
  r.dims_consistent = r.limit_dim >= r.generic_dim;

  const std::string mu = std::to_string(r.mu);
  if (r.exact) {
    r.statement = "limit is exactly a " + mu + "-fold point (length " +
                  std::to_string(r.scheme_length) + ")";
  } else if (r.scheme_length > r.point_length) {
    r.statement = "limit strictly contains the " + mu + "-fold point (length " +
                  std::to_string(r.scheme_length) + " > " + std::to_string(r.point_length) + ")";
  } else {
    r.statement = "length " + std::to_string(r.scheme_length) + " is below the " + mu +
                  "-fold point length " + std::to_string(r.point_length);
  }
  return r;
}

}  // namespace fatpoints
