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

#include "fatpoints/report_json.hpp"

#include <cstdio>
#include <limits>
#include <sstream>

#include "fatpoints/spec_text.hpp"

namespace fatpoints {

using nlohmann::json;

json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();  // exact, as a decimal string
}

std::string six_decimals(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

json to_json(const DimensionReport& r) {
  json trials = json::array();
  for (const Trial& t : r.trials) {
    trials.push_back({{"prime", t.prime},
                      {"seed", t.seed},
                      {"rows", t.rows},
                      {"cols", t.cols},
                      {"rank", t.rank},
                      {"dim", t.dim}});
  }
  return {{"virtual", r.virtual_dim},   {"expected", r.expected},
          {"computed", r.computed},     {"special", r.special},
          {"unstable", r.unstable},     {"short_circuited", r.short_circuited},
          {"primes", r.primes},         {"seeds", r.seeds},
          {"trials", trials}};
}

json to_json(const SequenceTable& t) {
  json rows = json::array();
  json s = json::array();
  json h = json::array();
  for (const SequenceRow& r : t.rows) {
    json row = {{"i", r.i}, {"h", big_to_json(r.h)}, {"s", big_to_json(r.s)}};
    if (r.i >= 3) row["a"] = big_to_json(a_seq(r.i, t.d));
    rows.push_back(row);
    s.push_back(big_to_json(r.s));
    h.push_back(big_to_json(r.h));
  }
  return {{"n", t.n}, {"d", t.d}, {"k", big_to_json(t.k)}, {"rows", rows}, {"s", s}, {"h", h}};
}

json to_json(const SequenceVerdicts& v) {
  return {{"hsa", v.hsa},
          {"kernel_expdim", v.kernel_expdim},
          {"trace_expdim", v.trace_expdim},
          {"clause_i", v.clause_i},
          {"clause_ii", v.clause_ii},
          {"clause_iii", v.clause_iii},
          {"clause_iv", v.clause_iv},
          {"clause_v", v.clause_v},
          {"clause_vi", v.clause_vi},
          {"all", v.all()}};
}

json to_json(const FiberCensus& c) {
  json hist = json::object();
  for (const auto& [size, count] : c.histogram) hist[std::to_string(size)] = count;
  // fraction_unique is the only non-integer: a fixed 6-decimal number.
  return {{"prime", c.prime},
          {"n", c.n},
          {"domain_size", c.domain_size},
          {"base_points", c.base_points},
          {"image_size", c.image_size},
          {"histogram", hist},
          {"unique_points", c.unique_points},
          {"fraction_unique", json::parse(six_decimals(c.fraction_unique))},
          {"verdict", to_string(c.verdict)}};
}

json to_json(const MapClassification& m) {
  json censuses = json::array();
  for (const FiberCensus& c : m.censuses) censuses.push_back(to_json(c));
  return {{"spec", print_spec(m.spec)},
          {"censuses", censuses},
          {"seeds", m.seeds},
          {"agree", m.agree},
          {"verdict", m.agree ? to_string(m.verdict) : "disagree"}};
}

json to_json(const IdentifiabilityReport& r) {
  json j = {{"n", r.n}, {"d", r.d}, {"kind", to_string(r.kind)}, {"note", r.note}};
  if (r.kind != Identifiability::kNonPerfect) j["k"] = r.rank;
  if (r.kind == Identifiability::kIdentifiable) j["s"] = r.rank;
  if (r.corroboration) j["corroboration"] = to_json(*r.corroboration);
  return j;
}

json to_json(const CollisionExperiment& e) {
  return {{"n", e.n},
          {"d", e.d},
          {"h", e.h},
          {"predicted_multiplicity", e.predicted_multiplicity},
          {"generic_dim", e.generic_dim},
          {"limit_dim", e.limit_dim},
          {"expected_dim", e.expected_dim},
          {"degree_identity", e.degree_identity},
          {"prime", e.prime},
          {"seed", e.seed},
          {"generic_side", print_spec(e.generic_side)},
          {"limit_side", print_spec(e.limit_side)},
          {"directions", e.directions}};
}

json to_json(const IndipReport& r) {
  return {{"n", r.n},
          {"prime", r.prime},
          {"seed", r.seed},
          {"resamples", r.resamples},
          {"points", r.points},
          {"quadric_rank", r.quadric_rank},
          {"independent", r.independent},
          {"triples", r.triples},
          {"triples_collinear", r.triples_collinear}};
}

json to_json(const LimitReport& r) {
  return {{"n", r.n},
          {"d", r.d},
          {"h", r.h},
          {"mu", r.mu},
          {"scheme_length", r.scheme_length},
          {"point_length", r.point_length},
          {"exact", r.exact},
          {"generic_dim", r.generic_dim},
          {"limit_dim", r.limit_dim},
          {"dims_consistent", r.dims_consistent},
          {"statement", r.statement}};
}

json to_json(const CastelnuovoAccounting& a) {
  json trials = json::array();
  for (const CastelnuovoTrial& t : a.trials) {
    trials.push_back({{"prime", t.prime},
                      {"seed", t.seed},
                      {"total", t.total},
                      {"kernel", t.kernel},
                      {"trace", t.trace}});
  }
  return {{"kernel_spec", print_spec(a.kernel_spec)},
          {"trace_spec", print_spec(a.trace_spec)},
          {"total", a.total},
          {"kernel", a.kernel},
          {"trace", a.trace},
          {"holds", a.holds},
          {"trials", trials}};
}

json to_json(const SuiteResult& s, bool with_timings) {
  json cases = json::array();
  for (const CaseResult& c : s.cases) {
    json j = {{"id", c.id},
              {"expected", c.expected},
              {"observed", c.observed},
              {"passed", c.passed},
              {"provenance", c.provenance}};
    if (with_timings) j["elapsed_ms"] = static_cast<std::int64_t>(c.elapsed_ms);
    cases.push_back(std::move(j));
  }
  json j = {{"name", s.name},
            {"passed", s.passed()},
            {"failures", s.failures()},
            {"primes", s.primes},
            {"seeds", s.seeds},
            {"cases", cases}};
  if (with_timings) j["elapsed_ms"] = static_cast<std::int64_t>(s.elapsed_ms);
  return j;
}

std::string suite_csv(const SuiteResult& s) {
  auto quote = [](const std::string& v) {
    std::string out = "\"";
    for (char ch : v) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
  };
  std::ostringstream out;
  out << "suite,case,passed,expected,observed,provenance,elapsed_ms\n";
  for (const CaseResult& c : s.cases) {
    out << quote(s.name) << ',' << quote(c.id) << ',' << (c.passed ? "true" : "false") << ','
        << quote(c.expected.dump()) << ',' << quote(c.observed.dump()) << ','
        << quote(c.provenance) << ',' << static_cast<std::int64_t>(c.elapsed_ms) << '\n';
  }
  return out.str();
}

}  // namespace fatpoints
