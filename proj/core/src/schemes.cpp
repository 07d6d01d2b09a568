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

#include "fatpoints/schemes.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <random>
#include <set>
#include <string>

#include "fatpoints/error.hpp"
#include "int_math.hpp"

namespace fatpoints {

using detail::binom64;

int SchemeSpec::max_multiplicity() const {
  int m = 0;
  for (const auto& p : points) m = std::max(m, p.multiplicity);
  return m;
}

int SchemeSpec::direction_count() const {
  int j = 0;
  for (const auto& p : points) j += static_cast<int>(p.directions.size());
  return j;
}

bool SchemeSpec::certainly_empty_candidate() const {
  return std::any_of(points.begin(), points.end(),
                     [&](const FatPoint& p) { return p.multiplicity >= d + 2; });
}

namespace {

void collect_subspaces(const Placement& p, std::set<int>& dims) {
  if (const auto* s = std::get_if<OnSubspace>(&p)) dims.insert(s->dim);
}

bool explicit_in_subspace(const SchemeSpec& spec, int id, int dim) {
  const auto& c = spec.explicit_points.at(static_cast<std::size_t>(id));
  for (std::size_t i = static_cast<std::size_t>(dim) + 1; i < c.size(); ++i) {
    if (c[i] != 0) return false;
  }
  return true;
}

// Smallest flag dimension known to contain the placement, or n.
int containing_dim(const SchemeSpec& spec, const Placement& p) {
  if (const auto* s = std::get_if<OnSubspace>(&p)) return s->dim;
  if (const auto* e = std::get_if<Explicit>(&p)) {
    for (int k = 0; k < spec.n; ++k) {
      if (explicit_in_subspace(spec, e->id, k)) return k;
    }
  }
  return spec.n;
}

void check_placement(const SchemeSpec& spec, const Placement& p, std::size_t item,
                     bool direction) {
  if (const auto* s = std::get_if<OnSubspace>(&p)) {
    if (s->dim < 0 || s->dim >= spec.n) {
      throw SemanticError("subspace dimension " + std::to_string(s->dim) +
                              " must lie in [0, " + std::to_string(spec.n - 1) + "]",
                          item);
    }
    if (!std::binary_search(spec.flag.begin(), spec.flag.end(), s->dim)) {
      throw SemanticError("subspace of dimension " + std::to_string(s->dim) +
                              " is not a declared flag member",
                          item);
    }
  } else if (const auto* e = std::get_if<Explicit>(&p)) {
    if (e->id < 0 || static_cast<std::size_t>(e->id) >= spec.explicit_points.size()) {
      throw SemanticError("explicit point id " + std::to_string(e->id) + " is undefined",
                          item);
    }
  } else if (const auto* c = std::get_if<NearCluster>(&p)) {
    if (direction) throw SemanticError("directions cannot be cluster placements", item);
    if (c->center < 0 || static_cast<std::size_t>(c->center) >= item) {
      throw SemanticError("cluster center must be an earlier point", item);
    }
    if (c->scale == 0) throw SemanticError("cluster scale must be nonzero", item);
  }
}

}  // namespace

void normalize_flag(SchemeSpec& spec) {
  std::set<int> dims(spec.flag.begin(), spec.flag.end());
  for (const auto& p : spec.points) {
    collect_subspaces(p.placement, dims);
    for (const auto& v : p.directions) collect_subspaces(v, dims);
  }
  dims.insert(spec.n);
  spec.flag.assign(dims.begin(), dims.end());
}

void validate(const SchemeSpec& spec) {
  if (spec.n < 1) throw InvalidArgument("ambient dimension must be at least 1");
  if (spec.d < 0) throw InvalidArgument("degree must be nonnegative");
  if (spec.flag.empty() || spec.flag.back() != spec.n) {
    throw InvalidArgument("flag must end with the ambient dimension");
  }
  for (std::size_t i = 1; i < spec.flag.size(); ++i) {
    if (spec.flag[i - 1] >= spec.flag[i]) {
      throw InvalidArgument("flag dimensions must be strictly increasing");
    }
  }
  for (std::size_t e = 0; e < spec.explicit_points.size(); ++e) {
    const auto& c = spec.explicit_points[e];
    if (c.size() != static_cast<std::size_t>(spec.n) + 1) {
      throw InvalidArgument("explicit point " + std::to_string(e) + " needs " +
                            std::to_string(spec.n + 1) + " coordinates");
    }
    if (std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; })) {
      throw InvalidArgument("explicit point " + std::to_string(e) + " is zero");
    }
  }
  for (std::size_t i = 0; i < spec.points.size(); ++i) {
    const FatPoint& p = spec.points[i];
    if (p.multiplicity < 1) throw SemanticError("multiplicity must be at least 1", i);
    check_placement(spec, p.placement, i, false);
    const int home = std::holds_alternative<NearCluster>(p.placement)
                         ? spec.n
                         : containing_dim(spec, p.placement);
    for (const auto& v : p.directions) {
      check_placement(spec, v, i, true);
      if (const auto* s = std::get_if<OnSubspace>(&v)) {
        if (home > s->dim) {
          throw SemanticError("direction in H" + std::to_string(s->dim) +
                                  " on a point outside that subspace",
                              i);
        }
        if (s->dim == 0) throw SemanticError("no direction fits in a 0-dimensional subspace", i);
      }
    }
  }
}

namespace {

class Sampler {
 public:
  Sampler(std::uint32_t p, std::uint64_t seed) : p_(p) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      p};
    rng_.seed(seq);
    bound_ = std::numeric_limits<std::uint64_t>::max() / p * p;
  }

  Residue uniform() {
    for (;;) {
      const std::uint64_t x = rng_();
      if (x < bound_) return static_cast<Residue>(x % p_);
    }
  }

  // Uniform point of the coordinate subspace spanned by x_0..x_dim.
  Point in_subspace(const PrimeField& f, int n, int dim) {
    Point pt(static_cast<std::size_t>(n) + 1, 0);
    for (;;) {
      bool nonzero = false;
      for (int i = 0; i <= dim; ++i) {
        pt[static_cast<std::size_t>(i)] = uniform();
        nonzero = nonzero || pt[static_cast<std::size_t>(i)] != 0;
      }
      if (nonzero) return normalize(f, pt);
    }
  }

 private:
  std::uint32_t p_;
  std::uint64_t bound_;
  std::mt19937_64 rng_;
};

constexpr int kMaxResample = 64;

Point explicit_point(const PrimeField& f, const SchemeSpec& spec, int id) {
  const auto& c = spec.explicit_points.at(static_cast<std::size_t>(id));
  Point pt(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) pt[i] = f.reduce(c[i]);
  if (std::all_of(pt.begin(), pt.end(), [](Residue x) { return x == 0; })) {
    throw InvalidArgument("explicit point " + std::to_string(id) +
                          " vanishes modulo " + std::to_string(f.modulus()));
  }
  return normalize(f, pt);
}

}  // namespace

SampledScheme sample(const SchemeSpec& spec, std::uint32_t prime, std::uint64_t seed) {
  validate(spec);
  const PrimeField f(prime);
  if (prime <= static_cast<std::uint32_t>(spec.d) ||
      prime <= static_cast<std::uint32_t>(spec.max_multiplicity())) {
    throw InvalidArgument("prime " + std::to_string(prime) +
                          " must exceed the degree and every multiplicity");
  }
  Sampler rng(prime, seed);
  SampledScheme out;
  out.prime = prime;
  out.seed = seed;
  const int n = spec.n;

  auto taken = [&](const Point& pt) {
    return std::any_of(out.points.begin(), out.points.end(),
                       [&](const Point& q) { return q == pt; });
  };

  for (const FatPoint& fp : spec.points) {
    Point pt;
    if (const auto* e = std::get_if<Explicit>(&fp.placement)) {
      pt = explicit_point(f, spec, e->id);
    } else if (const auto* c = std::get_if<NearCluster>(&fp.placement)) {
      const Point& center = out.points.at(static_cast<std::size_t>(c->center));
      const Residue scale = f.reduce(c->scale);
      if (scale == 0) throw InvalidArgument("cluster scale vanishes modulo the prime");
      for (int attempt = 0;; ++attempt) {
        Point w = rng.in_subspace(f, n, n);
        Point q(center.size());
        for (std::size_t i = 0; i < q.size(); ++i) q[i] = f.add(center[i], f.mul(scale, w[i]));
        if (std::any_of(q.begin(), q.end(), [](Residue x) { return x != 0; })) {
          pt = normalize(f, q);
          if (!taken(pt) || attempt >= kMaxResample) break;
        }
      }
    } else {
      const int dim = containing_dim(spec, fp.placement);
      for (int attempt = 0;; ++attempt) {
        pt = rng.in_subspace(f, n, dim);
        if (!taken(pt) || attempt >= kMaxResample) break;
      }
    }

    std::vector<Point> dirs;
    for (const Placement& v : fp.directions) {
      Point q;
      if (const auto* e = std::get_if<Explicit>(&v)) {
        q = explicit_point(f, spec, e->id);
        if (proportional(f, q, pt)) {
          throw InvalidArgument("explicit direction coincides with its point");
        }
      } else {
        const int dim = containing_dim(spec, v);
        do {
          q = rng.in_subspace(f, n, dim);
        } while (proportional(f, q, pt));
      }
      dirs.push_back(std::move(q));
    }
    out.points.push_back(std::move(pt));
    out.directions.push_back(std::move(dirs));
  }
  return out;
}

std::size_t condition_row_count(const SchemeSpec& spec) {
  std::int64_t rows = 0;
  for (const auto& p : spec.points) {
    rows += binom64(p.multiplicity - 1 + spec.n, spec.n) +
            static_cast<std::int64_t>(p.directions.size());
  }
  return static_cast<std::size_t>(rows);
}

FieldMatrix condition_matrix(const SchemeSpec& spec, const SampledScheme& sampled) {
  const PrimeField f(sampled.prime);
  const auto basis = monomial_basis(spec.n, spec.d);
  FieldMatrix m(f, 0, basis->size());
  for (std::size_t i = 0; i < spec.points.size(); ++i) {
    const auto mult = static_cast<unsigned>(spec.points[i].multiplicity);
    const Point& pt = sampled.points.at(i);
    for (const Vector& row : multiplicity_rows(f, *basis, pt, mult)) m.append_row(row);
    for (const Point& v : sampled.directions.at(i)) {
      m.append_row(tangent_direction_row(f, *basis, pt, v, mult));
    }
  }
  return m;
}

FieldMatrix condition_matrix(const SchemeSpec& spec, std::uint32_t prime,
                             std::uint64_t seed) {
  return condition_matrix(spec, sample(spec, prime, seed));
}

std::int64_t virtual_dim(const SchemeSpec& spec) {
  std::int64_t v = binom64(spec.n + spec.d, spec.n) - 1;
  for (const auto& p : spec.points) {
    v -= binom64(p.multiplicity - 1 + spec.n, spec.n);
    v -= static_cast<std::int64_t>(p.directions.size());
  }
  return v;
}

std::int64_t expected_dim(const SchemeSpec& spec) {
  return std::max<std::int64_t>(virtual_dim(spec), -1);
}

std::vector<std::uint64_t> default_seeds(int trials) {
  if (trials < 1) throw InvalidArgument("at least one trial is required");
  std::vector<std::uint64_t> seeds;
  for (int i = 1; i <= trials; ++i) seeds.push_back(static_cast<std::uint64_t>(i));
  return seeds;
}

DimensionReport dimension(const SchemeSpec& spec, std::span<const std::uint32_t> primes,
                          std::span<const std::uint64_t> seeds) {
  if (primes.empty() || seeds.empty()) {
    throw InvalidArgument("dimension needs at least one prime and one seed");
  }
  validate(spec);
  DimensionReport rep;
  rep.virtual_dim = virtual_dim(spec);
  rep.expected = expected_dim(spec);
  rep.primes.assign(primes.begin(), primes.end());
  rep.seeds.assign(seeds.begin(), seeds.end());

  const std::size_t rows = condition_row_count(spec);
  const auto cols = static_cast<std::size_t>(binom64(spec.n + spec.d, spec.n));
  const bool overdetermined = 2 * rows > 3 * cols;

  for (std::uint32_t p : primes) {
    for (std::uint64_t s : seeds) {
      const FieldMatrix m = condition_matrix(spec, p, s);
      Trial t;
      t.prime = p;
      t.seed = s;
      t.rows = m.rows();
      t.cols = m.cols();
      t.rank = rank(m);
      t.dim = static_cast<std::int64_t>(t.cols - t.rank) - 1;
      rep.trials.push_back(t);
      if (overdetermined && rep.trials.size() == 1 && t.rank == t.cols) {
        rep.short_circuited = true;
        break;
      }
    }
    if (rep.short_circuited) break;
  }

  rep.computed = rep.trials.front().dim;
  for (const Trial& t : rep.trials) {
    rep.computed = std::min(rep.computed, t.dim);
    if (t.dim != rep.trials.front().dim) rep.unstable = true;
  }
  rep.special = rep.computed > rep.expected;
  return rep;
}

DimensionReport dimension(const SchemeSpec& spec) {
  const auto seeds = default_seeds();
  return dimension(spec, default_primes(), seeds);
}

AhClassification ah_classify(int n, int d, int h) {
  if (d < 2) throw InvalidArgument("double-point classification needs d >= 2");
  if (n < 1 || h < 1) throw InvalidArgument("need n >= 1 and h >= 1");
  static constexpr std::array<std::array<int, 3>, 4> kSporadic{
      {{2, 4, 5}, {3, 4, 9}, {4, 3, 7}, {4, 4, 14}}};
  if (d == 2 && h >= 2 && h <= n) return {AhVerdict::kSpecial, "quadrics"};
  for (const auto& c : kSporadic) {
    if (c[0] == n && c[1] == d && c[2] == h) return {AhVerdict::kSpecial, "sporadic"};
  }
  return {AhVerdict::kNonspecial, ""};
}

SchemeSpec double_points(int n, int d, int h) {
  SchemeSpec spec;
  spec.n = n;
  spec.d = d;
  spec.flag = {n};
  spec.points.assign(static_cast<std::size_t>(std::max(h, 0)), FatPoint{Generic{}, 2, {}});
  return spec;
}

bool independence_check(const SchemeSpec& spec, std::span<const Placement> extra,
                        std::span<const std::uint32_t> primes,
                        std::span<const std::uint64_t> seeds) {
  SchemeSpec bigger = spec;
  for (const Placement& p : extra) bigger.points.push_back(FatPoint{p, 1, {}});
  normalize_flag(bigger);
  const auto before = dimension(spec, primes, seeds).computed;
  const auto after = dimension(bigger, primes, seeds).computed;
  return after == before - static_cast<std::int64_t>(extra.size());
}

bool on_hyperplane(const SchemeSpec& spec, const Placement& p) {
  if (const auto* s = std::get_if<OnSubspace>(&p)) return s->dim <= spec.n - 1;
  if (const auto* e = std::get_if<Explicit>(&p)) return explicit_in_subspace(spec, e->id, spec.n - 1);
  return false;
}

namespace {

// Which original points and directions survive in each half of the split.
struct SplitIndex {
  std::vector<std::size_t> point;
  std::vector<std::vector<std::size_t>> dirs;
};

struct Split {
  SchemeSpec kernel;
  SchemeSpec trace;
  SplitIndex kernel_index;
  SplitIndex trace_index;
};

Placement to_hyperplane(const SchemeSpec& spec, const Placement& p,
                        std::vector<int>& explicit_map, SchemeSpec& trace) {
  if (const auto* s = std::get_if<OnSubspace>(&p)) {
    if (s->dim == spec.n - 1) return Generic{};
    return *s;
  }
  const auto& e = std::get<Explicit>(p);
  int& slot = explicit_map.at(static_cast<std::size_t>(e.id));
  if (slot < 0) {
    auto c = spec.explicit_points.at(static_cast<std::size_t>(e.id));
    c.pop_back();
    slot = static_cast<int>(trace.explicit_points.size());
    trace.explicit_points.push_back(std::move(c));
  }
  return Explicit{slot};
}

Split split(const SchemeSpec& spec, int hyperplane_dim) {
  validate(spec);
  if (spec.n < 2) throw InvalidArgument("restriction needs n >= 2");
  if (hyperplane_dim != spec.n - 1) {
    throw InvalidArgument("H" + std::to_string(hyperplane_dim) +
                          " is not the hyperplane of the flag (dimension " +
                          std::to_string(spec.n - 1) + ")");
  }
  if (spec.d < 1) throw InvalidArgument("restriction needs d >= 1");
  Split out;
  out.kernel.n = spec.n;
  out.kernel.d = spec.d - 1;
  out.kernel.explicit_points = spec.explicit_points;
  out.trace.n = spec.n - 1;
  out.trace.d = spec.d;
  std::vector<int> explicit_map(spec.explicit_points.size(), -1);

  for (std::size_t i = 0; i < spec.points.size(); ++i) {
    const FatPoint& p = spec.points[i];
    if (!on_hyperplane(spec, p.placement)) {
      out.kernel.points.push_back(p);
      out.kernel_index.point.push_back(i);
      std::vector<std::size_t> all(p.directions.size());
      for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
      out.kernel_index.dirs.push_back(std::move(all));
      continue;
    }
    // Kernel: F = H*G, so G keeps multiplicity m-1 and the directions off H.
    FatPoint kp{p.placement, p.multiplicity - 1, {}};
    std::vector<std::size_t> kdirs;
    for (std::size_t k = 0; k < p.directions.size(); ++k) {
      if (!on_hyperplane(spec, p.directions[k])) {
        kp.directions.push_back(p.directions[k]);
        kdirs.push_back(k);
      }
    }
    if (kp.multiplicity == 0 && !kdirs.empty()) {
      // dF(v) = G(pt) dH(v) with dH(v) != 0: only G(pt) = 0 survives.
      kp.multiplicity = 1;
      kp.directions.clear();
      kdirs.clear();
    }
    if (kp.multiplicity > 0) {
      out.kernel.points.push_back(std::move(kp));
      out.kernel_index.point.push_back(i);
      out.kernel_index.dirs.push_back(std::move(kdirs));
    }

    FatPoint tp{to_hyperplane(spec, p.placement, explicit_map, out.trace), p.multiplicity, {}};
    std::vector<std::size_t> tdirs;
    for (std::size_t k = 0; k < p.directions.size(); ++k) {
      if (on_hyperplane(spec, p.directions[k])) {
        tp.directions.push_back(to_hyperplane(spec, p.directions[k], explicit_map, out.trace));
        tdirs.push_back(k);
      }
    }
    out.trace.points.push_back(std::move(tp));
    out.trace_index.point.push_back(i);
    out.trace_index.dirs.push_back(std::move(tdirs));
  }

  for (int k : spec.flag) {
    if (k < spec.n - 1) out.kernel.flag.push_back(k), out.trace.flag.push_back(k);
  }
  if (std::binary_search(spec.flag.begin(), spec.flag.end(), spec.n - 1)) {
    out.kernel.flag.push_back(spec.n - 1);
  }
  out.kernel.flag.push_back(spec.n);
  out.trace.flag.push_back(spec.n - 1);
  normalize_flag(out.kernel);
  normalize_flag(out.trace);
  return out;
}

SampledScheme restrict_sample(const SampledScheme& full, const SplitIndex& idx,
                              bool drop_last, const PrimeField& f) {
  SampledScheme out;
  out.prime = full.prime;
  out.seed = full.seed;
  auto fix = [&](Point p) {
    if (drop_last) p.pop_back();
    return normalize(f, std::move(p));
  };
  for (std::size_t j = 0; j < idx.point.size(); ++j) {
    const std::size_t i = idx.point[j];
    out.points.push_back(fix(full.points[i]));
    std::vector<Point> dirs;
    for (std::size_t k : idx.dirs[j]) dirs.push_back(fix(full.directions[i][k]));
    out.directions.push_back(std::move(dirs));
  }
  return out;
}

std::int64_t dim_of(const FieldMatrix& m) {
  return static_cast<std::int64_t>(m.cols() - rank(m)) - 1;
}

}  // namespace

std::pair<SchemeSpec, SchemeSpec> castelnuovo_split(const SchemeSpec& spec, int hyperplane_dim) {
  Split s = split(spec, hyperplane_dim);
  return {std::move(s.kernel), std::move(s.trace)};
}

CastelnuovoAccounting castelnuovo_accounting(const SchemeSpec& spec, int hyperplane_dim,
                                             std::span<const std::uint32_t> primes,
                                             std::span<const std::uint64_t> seeds) {
  if (primes.empty() || seeds.empty()) {
    throw InvalidArgument("accounting needs at least one prime and one seed");
  }
  Split s = split(spec, hyperplane_dim);
  CastelnuovoAccounting acc;
  acc.kernel_spec = s.kernel;
  acc.trace_spec = s.trace;
  for (std::uint32_t p : primes) {
    const PrimeField f(p);
    for (std::uint64_t seed : seeds) {
      const SampledScheme full = sample(spec, p, seed);
      CastelnuovoTrial t;
      t.prime = p;
      t.seed = seed;
      t.total = dim_of(condition_matrix(spec, full));
      t.kernel = dim_of(condition_matrix(s.kernel, restrict_sample(full, s.kernel_index, false, f)));
      t.trace = dim_of(condition_matrix(s.trace, restrict_sample(full, s.trace_index, true, f)));
      if (t.total > t.kernel + t.trace + 1) acc.holds = false;
      if (acc.trials.empty() || t.total < acc.total) {
        acc.total = t.total;
        acc.kernel = t.kernel;
        acc.trace = t.trace;
      }
      acc.trials.push_back(t);
    }
  }
  return acc;
}

}  // namespace fatpoints
