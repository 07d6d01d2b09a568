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

#include <algorithm>
#include <string>
#include <thread>
#include <utility>

#include "fatpoints/cremona.hpp"
#include "fatpoints/error.hpp"
#include "int_math.hpp"

namespace fatpoints {

namespace {

using Tally = std::vector<std::pair<std::uint64_t, std::uint64_t>>;  // sorted (key, count)

void merge_into(Tally& acc, const Tally& more) {
  Tally out;
  out.reserve(acc.size() + more.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < acc.size() || j < more.size()) {
    if (j == more.size() || (i < acc.size() && acc[i].first < more[j].first)) {
      out.push_back(acc[i++]);
    } else if (i == acc.size() || more[j].first < acc[i].first) {
      out.push_back(more[j++]);
    } else {
      out.emplace_back(acc[i].first, acc[i].second + more[j].second);
      ++i;
      ++j;
    }
  }
  acc.swap(out);
}

void flush(std::vector<std::uint64_t>& keys, Tally& acc) {
  if (keys.empty()) return;
  std::sort(keys.begin(), keys.end());
  Tally runs;
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    runs.emplace_back(keys[i], j - i);
    i = j;
  }
  keys.clear();
  merge_into(acc, runs);
}

struct Monomial {
  std::vector<unsigned> exps;
  Residue coeff;
};

// A unit of work: one chart (leading coordinate) and one assignment of the
// free coordinates strictly between the leading one and x_n.
struct Chunk {
  std::uint64_t begin;
  std::uint64_t end;
};

class Census {
 public:
  explicit Census(const RationalMap& map) : map_(map), f_(map.prime), inv_(inverse_table(f_)) {
    const int n = map.n;
    for (const Vector& form : map.forms) {
      std::vector<Monomial> terms;
      for (std::size_t j = 0; j < form.size(); ++j) {
        if (form[j] != 0) terms.push_back({(*map.basis)[j].exponents, form[j]});
      }
      forms_.push_back(std::move(terms));
    }
    const std::uint64_t p = map.prime;
    // Chart l has p^{max(n-l-1,0)} prefixes.
    for (int l = 0; l <= n; ++l) {
      chart_start_.push_back(total_);
      std::uint64_t c = 1;
      for (int k = 0; k < n - l - 1; ++k) c *= p;
      total_ += c;
    }
  }

  std::uint64_t tasks() const { return total_; }

  void run(Chunk chunk, Tally& acc, std::uint64_t& base) const {
    const int n = map_.n;
    const std::uint32_t p = map_.prime;
    const int d = map_.d;
    std::vector<std::uint64_t> keys;
    keys.reserve(1u << 20);
    std::vector<std::vector<Residue>> coef(forms_.size(), std::vector<Residue>(d + 1));
    std::vector<Residue> x(static_cast<std::size_t>(n) + 1);
    std::vector<std::vector<Residue>> pw(static_cast<std::size_t>(n) + 1,
                                         std::vector<Residue>(d + 1));
    Vector y(forms_.size());

    for (std::uint64_t t = chunk.begin; t < chunk.end; ++t) {
      const int l = static_cast<int>(std::upper_bound(chart_start_.begin(), chart_start_.end(), t) -
                                     chart_start_.begin()) -
                    1;
      std::uint64_t rest = t - chart_start_[static_cast<std::size_t>(l)];
      std::fill(x.begin(), x.end(), 0);
      x[static_cast<std::size_t>(l)] = 1;
      for (int i = n - 1; i > l; --i) {
        x[static_cast<std::size_t>(i)] = static_cast<Residue>(rest % p);
        rest /= p;
      }
      for (int i = l; i < n; ++i) {
        auto& row = pw[static_cast<std::size_t>(i)];
        row[0] = 1;
        for (int e = 1; e <= d; ++e) row[e] = f_.mul(row[e - 1], x[static_cast<std::size_t>(i)]);
      }
      // Univariate coefficients in x_n for this prefix.
      for (std::size_t f = 0; f < forms_.size(); ++f) {
        std::fill(coef[f].begin(), coef[f].end(), 0);
        for (const Monomial& m : forms_[f]) {
          Residue v = m.coeff;
          bool zero = false;
          for (int i = 0; i < n && !zero; ++i) {
            const unsigned e = m.exps[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (i < l) {
              zero = true;
            } else {
              v = f_.mul(v, pw[static_cast<std::size_t>(i)][e]);
            }
          }
          if (zero) continue;
          const unsigned en = m.exps[static_cast<std::size_t>(n)];
          coef[f][en] = f_.add(coef[f][en], v);
        }
      }
      const std::uint32_t xn_count = l == n ? 1 : p;
      for (std::uint32_t xn = 0; xn < xn_count; ++xn) {
        // On the last chart x_n is the leading 1.
        const Residue xv = l == n ? 1 : xn;
        bool all_zero = true;
        for (std::size_t f = 0; f < forms_.size(); ++f) {
          Residue acc_v = 0;
          for (int e = d; e >= 0; --e) acc_v = f_.add(f_.mul(acc_v, xv), coef[f][e]);
          y[f] = acc_v;
          all_zero = all_zero && acc_v == 0;
        }
        if (all_zero) {
          ++base;
          continue;
        }
        std::size_t lead = 0;
        while (y[lead] == 0) ++lead;
        const Residue s = inv_[y[lead]];
        std::uint64_t key = 0;
        for (std::size_t f = 0; f < y.size(); ++f) key = key * p + f_.mul(y[f], s);
        keys.push_back(key);
        if (keys.size() >= (1u << 22)) flush(keys, acc);
      }
    }
    flush(keys, acc);
  }

 private:
  const RationalMap& map_;
  PrimeField f_;
  std::vector<Residue> inv_;
  std::vector<std::vector<Monomial>> forms_;
  std::vector<std::uint64_t> chart_start_;
  std::uint64_t total_ = 0;
};

std::uint32_t largest_prime_within(int n, std::uint64_t monomials, double budget, std::uint32_t below,
                                   int d) {
  for (std::uint32_t q = below; q-- > 3;) {
    if (q <= static_cast<std::uint32_t>(d) || !is_prime(q)) continue;
    if (static_cast<double>(projective_point_count(q, n)) * static_cast<double>(monomials) <= budget) {
      return q;
    }
  }
  return 0;
}

}  // namespace

std::uint64_t projective_point_count(std::uint32_t p, int n) {
  if (n < 0) throw InvalidArgument("negative dimension");
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (int i = 0; i <= n; ++i) {
    if (i > 0) {
      if (power > UINT64_MAX / p) throw InvalidArgument("point count overflows 64 bits");
      power *= p;
    }
    total += power;
  }
  return total;
}

FiberCensus fiber_census(const RationalMap& map, const CensusOptions& options) {
  const int n = map.n;
  const std::uint32_t p = map.prime;
  if (map.forms.size() != static_cast<std::size_t>(n) + 1) {
    throw InvalidArgument("a map of P^n needs n+1 forms");
  }
  const auto monomials = static_cast<std::uint64_t>(detail::binom64(n + map.d, n));
  const std::uint64_t domain = projective_point_count(p, n);
  const double ops = static_cast<double>(domain) * static_cast<double>(monomials);
  if (ops > options.op_budget) {
    const std::uint32_t q = largest_prime_within(n, monomials, options.op_budget, p, map.d);
    throw BudgetExceeded("census over P^" + std::to_string(n) + "(F_" + std::to_string(p) +
                             ") needs about " + std::to_string(static_cast<std::uint64_t>(ops)) +
                             " operations, over the budget" +
                             (q ? "; try prime " + std::to_string(q) : std::string()),
                         q);
  }
  // Image keys pack n+1 residues in base p.
  {
    long double cap = 1;
    for (int i = 0; i <= n; ++i) cap *= p;
    if (cap >= 18446744073709551615.0L) {
      throw InvalidArgument("p^(n+1) must fit in 64 bits for image keys");
    }
  }

  const Census census(map);
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(
                                                         census.tasks(), 64))));
  std::vector<Tally> tallies(threads);
  std::vector<std::uint64_t> bases(threads, 0);
  const std::uint64_t per = (census.tasks() + threads - 1) / threads;
  if (threads == 1) {
    census.run({0, census.tasks()}, tallies[0], bases[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t b = std::min(census.tasks(), per * t);
      const std::uint64_t e = std::min(census.tasks(), per * (t + 1));
      pool.emplace_back([&, t, b, e] { census.run({b, e}, tallies[t], bases[t]); });
    }
    for (auto& th : pool) th.join();
  }
  Tally all;
  FiberCensus c;
  for (unsigned t = 0; t < threads; ++t) {
    merge_into(all, tallies[t]);
    c.base_points += bases[t];
  }

  c.prime = p;
  c.n = n;
  c.domain_size = domain;
  c.image_size = all.size();
  for (const auto& [key, count] : all) ++c.histogram[count];
  c.unique_points = c.histogram.count(1) ? c.histogram.at(1) : 0;
  const std::uint64_t mapped = domain - c.base_points;
  c.fraction_unique = mapped ? static_cast<double>(c.unique_points) / static_cast<double>(mapped) : 0.0;
  c.verdict = classify(c, options.thresholds);
  return c;
}

}  // namespace fatpoints
