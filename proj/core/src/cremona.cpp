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

#include "fatpoints/cremona.hpp"

#include <string>

#include "fatpoints/error.hpp"
#include "fatpoints/numerology.hpp"
#include "fatpoints/spec_text.hpp"

namespace fatpoints {

RationalMap map_from_system(const SchemeSpec& spec, std::uint32_t prime, std::uint64_t seed) {
  const FieldMatrix m = condition_matrix(spec, prime, seed);
  std::vector<Vector> kernel = kernel_basis(m);
  const auto dim = static_cast<std::int64_t>(kernel.size()) - 1;
  if (dim != spec.n) {
    throw NotACremonaCandidate(print_spec(spec) + " has dimension " + std::to_string(dim) +
                               " at p=" + std::to_string(prime) + ", seed " +
                               std::to_string(seed) + "; a map of P^" + std::to_string(spec.n) +
                               " needs dimension " + std::to_string(spec.n));
  }
  RationalMap map;
  map.n = spec.n;
  map.d = spec.d;
  map.basis = monomial_basis(spec.n, spec.d);
  map.forms = std::move(kernel);
  map.prime = prime;
  map.seed = seed;
  map.source = spec;
  return map;
}

std::string to_string(const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::kBirational:
      return "birational";
    case VerdictKind::kFinite:
      return "finite(" + std::to_string(v.degree) + ")";
    case VerdictKind::kFiberType:
      return "fiber-type";
    case VerdictKind::kInconclusive:
      break;
  }
  return "inconclusive";
}

Verdict classify(const FiberCensus& c, const Thresholds& t) {
  if (c.fraction_unique >= t.birational) return {VerdictKind::kBirational, 1};
  if (c.prime != 0 && static_cast<double>(c.image_size) <=
                          static_cast<double>(c.domain_size) * t.fiber / c.prime) {
    return {VerdictKind::kFiberType, 0};
  }
  const std::uint64_t mapped = c.domain_size - c.base_points;
  if (mapped > 0) {
    for (const auto& [size, count] : c.histogram) {
      if (size < 2) continue;
      const double share = static_cast<double>(size) * static_cast<double>(count) /
                           static_cast<double>(mapped);
      if (share >= t.finite) return {VerdictKind::kFinite, size};
    }
  }
  return {VerdictKind::kInconclusive, 0};
}

std::size_t quadric_rank(const PrimeField& field, const Form& quadric) {
  if (quadric.basis->degree() != 2) throw InvalidArgument("quadric rank needs a degree-2 form");
  if (field.modulus() == 2) throw InvalidArgument("quadric rank needs odd characteristic");
  const auto vars = static_cast<std::size_t>(quadric.basis->dimension()) + 1;
  FieldMatrix s(field, vars, vars);
  const Residue half = field.inv(2);
  for (std::size_t j = 0; j < quadric.basis->size(); ++j) {
    const auto& e = (*quadric.basis)[j].exponents;
    std::size_t a = vars;
    std::size_t b = vars;
    for (std::size_t i = 0; i < vars; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) (a == vars ? a : b) = i;
    }
    const Residue c = quadric.coeffs.at(j);
    if (a == b) {
      s.set(a, a, c);
    } else {
      s.set(a, b, field.mul(c, half));
      s.set(b, a, field.mul(c, half));
    }
  }
  return rank(s);
}

std::vector<std::uint32_t> census_primes(int n) {
  if (n < 1) throw InvalidArgument("census needs n >= 1");
  if (n <= 2) return {499, 503};
  if (n == 3) return {127, 131};
  if (n == 4) return {31, 61};
  return {31, 37};
}

namespace {

constexpr std::uint64_t kCandidateSeeds = 5;

}  // namespace

MapClassification classify_system(const SchemeSpec& spec, const std::vector<std::uint32_t>& primes,
                                  const CensusOptions& options) {
  if (primes.empty()) throw InvalidArgument("classification needs at least one prime");
  MapClassification out;
  out.spec = spec;
  for (std::uint32_t p : primes) {
    // A sample can be special by accident; try a few seeds before giving up.
    std::optional<RationalMap> map;
    for (std::uint64_t seed = 1; seed <= kCandidateSeeds && !map; ++seed) {
      try {
        map = map_from_system(spec, p, seed);
      } catch (const NotACremonaCandidate&) {
        if (seed == kCandidateSeeds) throw;
      }
    }
    out.censuses.push_back(fiber_census(*map, options));
    out.seeds.push_back(map->seed);
  }
  out.agree = true;
  for (const FiberCensus& c : out.censuses) {
    if (!(c.verdict == out.censuses.front().verdict)) out.agree = false;
  }
  out.verdict = out.agree ? out.censuses.front().verdict : Verdict{};
  return out;
}

std::string to_string(Identifiability kind) {
  switch (kind) {
    case Identifiability::kIdentifiable:
      return "identifiable";
    case Identifiability::kNotIdentifiable:
      return "not-identifiable";
    case Identifiability::kNonPerfect:
      break;
  }
  return "non-perfect";
}

IdentifiabilityReport identifiability_verdict(int n, int d, bool corroborate,
                                              const CensusOptions& options) {
  const KValue k = k_value(n, d);
  IdentifiabilityReport r;
  r.n = n;
  r.d = d;
  if (!k.integral) {
    r.kind = Identifiability::kNonPerfect;
    r.note = "k(n,d) = binom(n+d,n)/(n+1) is not an integer";
    return r;
  }
  r.rank = static_cast<std::int64_t>(numerator(k.value));
  const bool listed = (n == 1 && d % 2 == 1) || (n == 3 && d == 3) || (n == 2 && d == 5);
  r.kind = listed ? Identifiability::kIdentifiable : Identifiability::kNotIdentifiable;
  if (d == 1) {
    r.kind = Identifiability::kIdentifiable;
    r.note = "a linear form is its own unique decomposition";
    return r;
  }
  if (!corroborate) return r;

  const SchemeSpec spec = double_points(n, d, static_cast<int>(r.rank - 1));
  const auto primes = census_primes(n);
  const double monomials = static_cast<double>(binomial(n + d, n).convert_to<double>());
  for (std::uint32_t p : primes) {
    if (static_cast<double>(projective_point_count(p, n)) * monomials > options.op_budget) {
      r.note = "census of " + print_spec(spec) + " exceeds the operation budget";
      return r;
    }
  }
  try {
    r.corroboration = classify_system(spec, primes, options);
    const bool birational = r.corroboration->agree &&
                            r.corroboration->verdict.kind == VerdictKind::kBirational;
    r.note = std::string("census of ") + print_spec(spec) + ": " +
             (r.corroboration->agree ? to_string(r.corroboration->verdict) : "primes disagree") +
             ((birational == listed) ? " (consistent)" : " (INCONSISTENT)");
  } catch (const NotACremonaCandidate& e) {
    r.note = std::string("no candidate map: ") + e.what();
    if (listed) r.note += " (INCONSISTENT)";
  }
  return r;
}

}  // namespace fatpoints
