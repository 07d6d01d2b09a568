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


// Command-line front end. Every subcommand prints one JSON report
// {tool_version, subcommand, spec, primes, seeds, result, cases, timings}
// (or CSV with --csv) and exits 0 when every check passed, 1 when one
// failed and 2 on a usage error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <nlohmann/json.hpp>

#include "fatpoints/cremona.hpp"
#include "fatpoints/degeneration.hpp"
#include "fatpoints/error.hpp"
#include "fatpoints/numerology.hpp"
#include "fatpoints/report_json.hpp"
#include "fatpoints/schemes.hpp"
#include "fatpoints/spec_text.hpp"
#include "fatpoints/suites.hpp"

namespace {

using fatpoints::SchemeSpec;
using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Common {
  std::vector<std::uint32_t> primes;
  std::vector<std::uint64_t> seeds;
  int trials = 3;
  double budget = 1e10;
  unsigned threads = 0;
  bool json_out = false;
  bool csv_out = false;
  bool compact = false;
};

struct Outcome {
  json spec;  // null when the subcommand takes no scheme
  json result;
  std::vector<fatpoints::CaseResult> cases;
  bool passed = true;
  std::vector<std::uint32_t> primes;
  std::vector<std::uint64_t> seeds;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--prime,--primes", c.primes, "Prime moduli (repeat or comma-separate)")
      ->delimiter(',');
  sub->add_option("--seed,--seeds", c.seeds, "Sampling seeds (repeat or comma-separate)")
      ->delimiter(',');
  sub->add_option("--trials", c.trials, "Seeds 1..N when --seed is absent")
      ->check(CLI::Range(1, 1000));
  sub->add_option("--budget", c.budget, "Operation budget for a fiber census")
      ->check(CLI::PositiveNumber);
  sub->add_option("--threads", c.threads, "Census threads (0: all cores)");
  auto* j = sub->add_flag("--json", c.json_out, "JSON report (default)");
  auto* v = sub->add_flag("--csv", c.csv_out, "CSV summary, one line per case");
  j->excludes(v);
  sub->add_flag("--compact", c.compact, "Single-line JSON");
}

std::vector<std::uint32_t> primes_or_default(const Common& c) {
  return c.primes.empty() ? fatpoints::default_primes() : c.primes;
}

std::vector<std::uint64_t> seeds_or_default(const Common& c) {
  return c.seeds.empty() ? fatpoints::default_seeds(c.trials) : c.seeds;
}

fatpoints::CensusOptions census_options(const Common& c) {
  fatpoints::CensusOptions o;
  o.op_budget = c.budget;
  o.threads = c.threads;
  return o;
}

fatpoints::SuiteOptions suite_options(const Common& c) {
  fatpoints::SuiteOptions o;
  o.primes = primes_or_default(c);
  o.seeds = seeds_or_default(c);
  o.census = census_options(c);
  return o;
}

// Every prime must exceed the degree and every multiplicity of the scheme.
void check_primes(const SchemeSpec& spec, const std::vector<std::uint32_t>& primes) {
  const int bound = std::max(spec.d, spec.max_multiplicity());
  for (std::uint32_t p : primes) {
    if (!fatpoints::is_prime(p) || p == 2) {
      throw fatpoints::InvalidArgument(std::to_string(p) + " is not an odd prime");
    }
    if (p <= static_cast<std::uint32_t>(bound)) {
      throw fatpoints::InvalidArgument("prime " + std::to_string(p) +
                                       " does not exceed degree and multiplicities (" +
                                       std::to_string(bound) + ")");
    }
  }
}

fatpoints::CaseResult single_case(std::string id, json observed, bool passed) {
  fatpoints::CaseResult c;
  c.id = std::move(id);
  c.expected = json::object();
  c.observed = std::move(observed);
  c.passed = passed;
  c.provenance = "command line";
  return c;
}

Outcome run_dim(const std::string& text, const Common& c) {
  Outcome out;
  SchemeSpec spec = fatpoints::parse_spec(text);
  out.primes = primes_or_default(c);
  out.seeds = seeds_or_default(c);
  check_primes(spec, out.primes);
  const auto r = fatpoints::dimension(spec, out.primes, out.seeds);
  out.spec = fatpoints::spec_to_json(spec);
  out.result = fatpoints::to_json(r);
  out.passed = !r.unstable;
  out.cases.push_back(single_case(fatpoints::print_spec(spec), out.result, out.passed));
  return out;
}

Outcome run_seq(int n, int d) {
  Outcome out;
  const auto table = fatpoints::hs_sequences(n, d);
  const auto verdicts = fatpoints::verify_sequence_properties(table);
  out.result = fatpoints::to_json(table);
  out.result["verdicts"] = fatpoints::to_json(verdicts);
  out.result["all"] = verdicts.all();
  out.passed = verdicts.all();
  out.cases.push_back(single_case("seq:" + std::to_string(n) + "," + std::to_string(d),
                                  out.result["verdicts"], out.passed));
  return out;
}

Outcome run_cremona(const std::string& text, const Common& c) {
  Outcome out;
  SchemeSpec spec = fatpoints::parse_spec(text);
  out.primes = c.primes.empty() ? fatpoints::census_primes(spec.n) : c.primes;
  check_primes(spec, out.primes);
  const auto m = fatpoints::classify_system(spec, out.primes, census_options(c));
  out.spec = fatpoints::spec_to_json(spec);
  out.seeds = m.seeds;
  out.result = fatpoints::to_json(m);
  out.result["verdict"] = m.agree ? fatpoints::to_string(m.verdict) : "disagree";
  bool conserved = true;
  for (const auto& census : m.censuses) {
    std::uint64_t mass = 0;
    for (const auto& [size, count] : census.histogram) mass += size * count;
    conserved = conserved && mass == census.domain_size - census.base_points;
  }
  out.result["conserved"] = conserved;
  out.passed = m.agree && conserved;
  out.cases.push_back(single_case(fatpoints::print_spec(spec), out.result, out.passed));
  return out;
}

Outcome run_identif(int n, int d, bool corroborate, const Common& c) {
  Outcome out;
  const auto r = fatpoints::identifiability_verdict(n, d, corroborate, census_options(c));
  out.result = fatpoints::to_json(r);
  out.passed = !r.corroboration || r.corroboration->agree;
  out.cases.push_back(single_case("identif:" + std::to_string(n) + "," + std::to_string(d),
                                  out.result, out.passed));
  return out;
}

Outcome run_collide(const std::string& mode, int n, int d, int h, const Common& c) {
  Outcome out;
  out.primes = primes_or_default(c);
  out.seeds = seeds_or_default(c);
  std::string id = mode + ":" + std::to_string(n);
  if (mode == "collision1" || mode == "limit") id += "," + std::to_string(d);
  if (mode == "limit" || mode == "degree") id += "," + std::to_string(h);
  if (mode == "collision1") {
    json runs = json::array();
    for (std::uint32_t p : out.primes) {
      const auto e = fatpoints::collision1_check(n, d, p, out.seeds.front());
      out.passed = out.passed && e.generic_dim == e.limit_dim && e.degree_identity;
      runs.push_back(fatpoints::to_json(e));
    }
    out.result = {{"runs", runs}, {"equal", out.passed}};
  } else if (mode == "limit") {
    const auto r = fatpoints::limit_multiplicity_check(n, d, h, out.primes, out.seeds);
    out.result = fatpoints::to_json(r);
    out.result["collision_limit_degree"] = fatpoints::collision_limit_degree(n, h);
    out.passed = r.dims_consistent;
  } else if (mode == "degree") {
    out.result = {{"n", n}, {"h", h}, {"mu", fatpoints::collision_limit_degree(n, h)}};
  } else {  // indip
    json runs = json::array();
    for (std::uint32_t p : out.primes) {
      const auto r = fatpoints::indip_check(n, p, out.seeds.front());
      out.passed = out.passed && r.independent && r.triples_collinear;
      runs.push_back(fatpoints::to_json(r));
    }
    out.result = {{"runs", runs}, {"holds", out.passed}};
  }
  out.cases.push_back(single_case(id, out.result, out.passed));
  return out;
}

Outcome run_castelnuovo(const std::string& text, std::optional<int> hyperplane,
                        const Common& c) {
  Outcome out;
  SchemeSpec spec = fatpoints::parse_spec(text);
  out.primes = primes_or_default(c);
  out.seeds = seeds_or_default(c);
  check_primes(spec, out.primes);
  const int hdim = hyperplane.value_or(spec.n - 1);
  const auto a = fatpoints::castelnuovo_accounting(spec, hdim, out.primes, out.seeds);
  out.spec = fatpoints::spec_to_json(spec);
  out.result = fatpoints::to_json(a);
  out.passed = a.holds;
  out.cases.push_back(single_case(fatpoints::print_spec(spec), out.result, out.passed));
  return out;
}

Outcome from_suites(const std::vector<fatpoints::SuiteResult>& suites,
                    const fatpoints::SuiteOptions& opt) {
  Outcome out;
  out.primes = opt.primes;
  out.seeds = opt.seeds;
  json per = json::array();
  for (const auto& s : suites) {
    per.push_back({{"name", s.name}, {"passed", s.passed()}, {"failures", s.failures()},
                   {"cases", s.cases.size()}});
    out.passed = out.passed && s.passed();
    for (const auto& c : s.cases) {
      out.cases.push_back(c);
      out.cases.back().id = s.name + "/" + c.id;
    }
  }
  out.result = {{"suites", per}, {"passed", out.passed}};
  return out;
}

fatpoints::SuiteResult named_suite(const std::string& name, const fatpoints::SuiteOptions& opt,
                                   int n_max, int d_max) {
  if (name == "ah") return fatpoints::run_ah_suite(n_max, d_max, opt);
  if (name == "prop23") return fatpoints::run_prop23_suite(fatpoints::default_prop23_cases(), opt);
  if (name == "section45") return fatpoints::run_section45_suite(opt);
  if (name == "theorem2") return fatpoints::run_theorem2_suite(opt);
  if (name == "genus") return fatpoints::run_genus_suite(opt);
  throw CLI::ValidationError("suite", "unknown suite '" + name + "'");
}

json load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fatpoints::InvalidArgument("cannot open manifest " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw fatpoints::InvalidArgument("manifest " + path + ": " + e.what());
  }
}

void emit(const std::string& subcommand, const Outcome& out, const Common& c,
          double elapsed_ms) {
  if (c.csv_out) {
    fatpoints::SuiteResult s;
    s.name = subcommand;
    s.cases = out.cases;
    std::cout << fatpoints::suite_csv(s);
    return;
  }
  json cases = json::array();
  for (const auto& cr : out.cases) {
    cases.push_back({{"id", cr.id},
                     {"expected", cr.expected},
                     {"observed", cr.observed},
                     {"passed", cr.passed},
                     {"provenance", cr.provenance}});
  }
  json timings = {{"total_ms", static_cast<std::int64_t>(elapsed_ms)}};
  json per_case = json::object();
  for (const auto& cr : out.cases) per_case[cr.id] = static_cast<std::int64_t>(cr.elapsed_ms);
  timings["cases_ms"] = per_case;
  const json report = {{"tool_version", fatpoints::kToolVersion},
                       {"subcommand", subcommand},
                       {"spec", out.spec},
                       {"primes", out.primes},
                       {"seeds", out.seeds},
                       {"result", out.result},
                       {"cases", cases},
                       {"passed", out.passed},
                       {"timings", timings}};
  std::cout << (c.compact ? report.dump() : report.dump(2)) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear systems with fat points over prime fields"};
  app.set_version_flag("--version", std::string(fatpoints::kToolVersion));
  app.require_subcommand(1);

  Common common;
  std::string spec_text;
  int n = 0;
  int d = 0;
  int h = 0;
  int n_max = 4;
  int d_max = 6;
  bool no_corroborate = false;
  std::string mode = "collision1";
  std::optional<int> hyperplane;
  std::vector<std::string> suite_names;
  std::string manifest_path;

  auto* dim = app.add_subcommand("dim", "Dimension of a linear system");
  dim->add_option("spec", spec_text, "Scheme, e.g. L(2,4;2^5)")->required();
  add_common(dim, common);

  auto* ah = app.add_subcommand("ah", "Double-point speciality table");
  ah->add_option("--n-max", n_max)->check(CLI::Range(1, 8));
  ah->add_option("--d-max", d_max)->check(CLI::Range(2, 12));
  add_common(ah, common);

  auto* seq = app.add_subcommand("seq", "Flag sequences h(i), s(i) and their properties");
  seq->add_option("--n", n)->required()->check(CLI::Range(2, 200));
  seq->add_option("--d", d)->required()->check(CLI::Range(1, 200));
  add_common(seq, common);

  auto* cremona = app.add_subcommand("cremona", "Census classification of the map of a system");
  cremona->add_option("spec", spec_text)->required();
  add_common(cremona, common);

  auto* identif = app.add_subcommand("identif", "Identifiability of general forms");
  identif->add_option("--n", n)->required()->check(CLI::Range(1, 50));
  identif->add_option("--d", d)->required()->check(CLI::Range(1, 50));
  identif->add_flag("--no-corroborate", no_corroborate, "Skip the census corroboration");
  add_common(identif, common);

  auto* collide = app.add_subcommand("collide", "Degeneration experiments");
  collide->add_option("--mode", mode)
      ->check(CLI::IsMember({"collision1", "limit", "degree", "indip"}));
  collide->add_option("--n", n)->required()->check(CLI::Range(1, 50));
  collide->add_option("--d", d)->check(CLI::Range(1, 50));
  collide->add_option("--points", h, "Colliding double points (limit, degree)")
      ->check(CLI::Range(0, 10000));
  add_common(collide, common);

  auto* castelnuovo = app.add_subcommand("castelnuovo", "Kernel/trace split along a hyperplane");
  castelnuovo->add_option("spec", spec_text)->required();
  castelnuovo->add_option("--hyperplane", hyperplane, "Flag member (default n-1)");
  add_common(castelnuovo, common);

  auto* suite = app.add_subcommand("suite", "Run named suites or a manifest");
  suite->add_option("names", suite_names, "ah, prop23, section45, theorem2, genus");
  suite->add_option("--manifest", manifest_path, "JSON manifest of cases")
      ->check(CLI::ExistingFile);
  suite->add_option("--n-max", n_max)->check(CLI::Range(1, 8));
  suite->add_option("--d-max", d_max)->check(CLI::Range(2, 12));
  add_common(suite, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  std::string name;
  try {
    if (*dim) {
      name = "dim";
      out = run_dim(spec_text, common);
    } else if (*ah) {
      name = "ah";
      const auto opt = suite_options(common);
      out = from_suites({fatpoints::run_ah_suite(n_max, d_max, opt)}, opt);
    } else if (*seq) {
      name = "seq";
      out = run_seq(n, d);
    } else if (*cremona) {
      name = "cremona";
      out = run_cremona(spec_text, common);
    } else if (*identif) {
      name = "identif";
      out = run_identif(n, d, !no_corroborate, common);
    } else if (*collide) {
      name = "collide";
      if (mode != "indip" && mode != "degree" && d == 0) {
        throw CLI::ValidationError("--d", "required for this mode");
      }
      out = run_collide(mode, n, d, h, common);
    } else if (*castelnuovo) {
      name = "castelnuovo";
      out = run_castelnuovo(spec_text, hyperplane, common);
    } else {
      name = "suite";
      if (suite_names.empty() && manifest_path.empty()) {
        throw CLI::ValidationError("suite", "give suite names or --manifest");
      }
      const auto opt = suite_options(common);
      std::vector<fatpoints::SuiteResult> results;
      for (const auto& s : suite_names) results.push_back(named_suite(s, opt, n_max, d_max));
      if (!manifest_path.empty()) {
        results.push_back(fatpoints::run_manifest(load_manifest(manifest_path), opt));
      }
      out = from_suites(results, opt);
      if (!manifest_path.empty()) {
        out.primes = results.back().primes;
        out.seeds = results.back().seeds;
      }
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const fatpoints::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (try --prime " << e.suggested_prime() << ")\n";
    return kUsage;
  } catch (const fatpoints::NotACremonaCandidate& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const fatpoints::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  emit(name, out, common, elapsed);
  return out.passed ? kPass : kFail;
}
