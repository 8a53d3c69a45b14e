#pragma once

// Scenario runner behind the command-line tool: one scenario per
// subcommand, a self-contained report per run, and human/json emitters.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "snakecone/abelian_homology.hpp"
#include "snakecone/error.hpp"
#include "snakecone/group.hpp"
#include "snakecone/sigma_word.hpp"
#include "snakecone/smith.hpp"
#include "snakecone/snake_pi1.hpp"
#include "snakecone/text.hpp"

namespace snakecone {

enum class ScenarioKind { pi1_single, pi1_random, h2_single, h2_random, h2_exhaustive, snf };

inline const char* kind_name(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::pi1_single: return "pi1-single";
    case ScenarioKind::pi1_random: return "pi1-random";
    case ScenarioKind::h2_single: return "h2-single";
    case ScenarioKind::h2_random: return "h2-random";
    case ScenarioKind::h2_exhaustive: return "h2-exhaustive";
    case ScenarioKind::snf: return "snf";
  }
  return "";
}

inline const char* command_name(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::pi1_single: return "verify-pi1";
    case ScenarioKind::pi1_random: return "verify-pi1-random";
    case ScenarioKind::h2_single: return "verify-h2";
    case ScenarioKind::h2_random: return "verify-h2-random";
    case ScenarioKind::h2_exhaustive: return "verify-h2-exhaustive";
    case ScenarioKind::snf: return "snf";
  }
  return "";
}

inline constexpr std::int64_t kMinDefaultHorizon = 6;

struct Scenario {
  ScenarioKind kind = ScenarioKind::pi1_single;
  GroupDescriptor group;
  std::uint64_t seed = 0;

  // pi1 kinds
  std::optional<SigmaWord> word;
  std::optional<std::int64_t> depth;
  std::optional<std::int64_t> horizon;
  std::size_t count = 1000;
  std::int64_t max_index = 6;
  std::size_t max_len = 12;

  // h2 kinds
  std::optional<AbelianSequence> v, w;
  std::optional<std::size_t> length;
  std::size_t trials = 1000;

  // snf
  std::optional<IntegerMatrix> matrix;
};

struct CheckRecord {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct ScenarioReport {
  ScenarioKind kind = ScenarioKind::pi1_single;
  std::string group;
  std::uint64_t seed = 0;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<CheckRecord> checks;
  nlohmann::ordered_json outputs = nlohmann::ordered_json::object();
  std::vector<std::string> assumptions;
  bool verdict = false;
  double timing_ms = 0.0;
  std::string replay;

  void add_check(std::string name, std::string expected, std::string computed, bool pass) {
    checks.push_back({std::move(name), std::move(expected), std::move(computed), pass});
  }
  void finish() {
    verdict = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  }
};

/// Smallest admissible plan for a word: M = max(max_index, 6), k = M + 1.
inline std::pair<std::int64_t, std::int64_t> default_plan(const SigmaWord& w,
                                                          std::optional<std::int64_t> depth,
                                                          std::optional<std::int64_t> horizon) {
  std::int64_t M = horizon ? *horizon : std::max(max_index(w), kMinDefaultHorizon);
  std::int64_t k = depth ? *depth : M + 1;
  return {k, M};
}

namespace detail {

inline void require_plan(const SigmaWord& w, std::int64_t k, std::int64_t M) {
  if (M < max_index(w))
    throw InadmissiblePlan("horizon " + std::to_string(M) + " violates horizon >= max_index(word) = " +
                           std::to_string(max_index(w)));
  if (k <= M)
    throw InadmissiblePlan("depth " + std::to_string(k) + " violates depth > horizon = " +
                           std::to_string(M));
}

inline std::string quote(const std::string& s) { return "'" + s + "'"; }

inline void run_pi1_single(const Scenario& s, ScenarioReport& r) {
  if (!s.word) throw DomainError("verify-pi1 needs --word");
  const SigmaWord& w = *s.word;
  auto [k, M] = default_plan(w, s.depth, s.horizon);
  require_plan(w, k, M);
  r.inputs["word"] = to_string(w);
  r.parameters["depth"] = k;
  r.parameters["horizon"] = M;
  Pi1Report p = verify_theorem1(w, k, M);
  for (const auto& c : p.checks)
    r.add_check(c.name, to_string(c.expected), to_string(c.computed), c.pass);
  r.outputs["W*"] = to_string(p.w_star);
  r.outputs["W0"] = to_string(p.w0);
  r.outputs["W0*"] = to_string(p.w0_star);
  r.replay = std::string("verify-pi1 --group ") + to_string(s.group) + " --word " +
             quote(to_string(w)) + " --depth " + std::to_string(k) + " --horizon " +
             std::to_string(M);
}

inline void run_pi1_random(const Scenario& s, ScenarioReport& r) {
  if (s.max_index < 1) throw InadmissiblePlan("--max-index must be >= 1");
  r.parameters["count"] = s.count;
  r.parameters["max_index"] = s.max_index;
  r.parameters["max_len"] = s.max_len;
  if (s.depth) r.parameters["depth"] = *s.depth;
  if (s.horizon) r.parameters["horizon"] = *s.horizon;
  if (s.horizon || s.depth) {
    // An explicit plan must be admissible for every word the campaign can draw.
    std::int64_t M = s.horizon.value_or(std::max(s.max_index, kMinDefaultHorizon));
    std::int64_t k = s.depth.value_or(M + 1);
    if (M < s.max_index)
      throw InadmissiblePlan("horizon " + std::to_string(M) +
                             " violates horizon >= --max-index = " + std::to_string(s.max_index));
    if (k <= M)
      throw InadmissiblePlan("depth " + std::to_string(k) + " violates depth > horizon = " +
                             std::to_string(M));
  }

  std::mt19937_64 rng(s.seed);
  std::uniform_int_distribution<std::size_t> len(0, s.max_len);
  std::vector<std::size_t> passed(kPi1CheckNames.size(), 0);
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < s.count; ++i) {
    SigmaWord w = random_word(s.group, s.max_index, len(rng), rng);
    auto [k, M] = default_plan(w, s.depth, s.horizon);
    Pi1Report p = verify_theorem1(w, k, M);
    for (std::size_t c = 0; c < p.checks.size(); ++c) {
      if (p.checks[c].pass) {
        ++passed[c];
      } else if (failures.size() < 10) {
        failures.push_back({{"case", i},
                            {"word", to_string(w)},
                            {"check", p.checks[c].name},
                            {"expected", to_string(p.checks[c].expected)},
                            {"computed", to_string(p.checks[c].computed)}});
      }
    }
  }
  const std::string total = std::to_string(s.count) + "/" + std::to_string(s.count);
  for (std::size_t c = 0; c < passed.size(); ++c)
    r.add_check(kPi1CheckNames[c], total,
                std::to_string(passed[c]) + "/" + std::to_string(s.count), passed[c] == s.count);
  r.outputs["failures"] = failures;
  r.replay = std::string("verify-pi1-random --group ") + to_string(s.group) + " --seed " +
             std::to_string(s.seed) + " --count " + std::to_string(s.count) + " --max-index " +
             std::to_string(s.max_index) + " --max-len " + std::to_string(s.max_len) +
             (s.depth ? " --depth " + std::to_string(*s.depth) : "") +
             (s.horizon ? " --horizon " + std::to_string(*s.horizon) : "");
}

inline void add_h2_assumptions(ScenarioReport& r) {
  r.assumptions.push_back("H_{n-1}(Y0 ∩ Y1) = 0 (hypothesis: Z is (n-1)-connected)");
  r.assumptions.push_back("H_n of Y0 ∩ Y1, Y0, Y1 identified with sequences over H_n(Z)");
}

inline void run_h2_single(const Scenario& s, ScenarioReport& r) {
  if (!s.v || !s.w) throw DomainError("verify-h2 needs --v and --w");
  if (s.v->length() != s.w->length())
    throw InadmissiblePlan("--v and --w lengths differ: " + std::to_string(s.v->length()) +
                           " vs " + std::to_string(s.w->length()));
  if (s.length && *s.length != s.v->length())
    throw InadmissiblePlan("--length " + std::to_string(*s.length) +
                           " does not match the sequence length " + std::to_string(s.v->length()));
  r.inputs["v"] = to_string(*s.v);
  r.inputs["w"] = to_string(*s.w);
  r.parameters["length"] = s.v->length();
  AbelianSequence u = mv_preimage(*s.v, *s.w);
  AbelianSequence a = i0_seq(u), b = i1_seq(u);
  r.add_check("i0(u) = v", to_string(*s.v), to_string(a), a == *s.v);
  r.add_check("i1(u) = w", to_string(*s.w), to_string(b), b == *s.w);
  r.outputs["preimage"] = to_string(u);
  add_h2_assumptions(r);
  r.replay = std::string("verify-h2 --group ") + to_string(s.group) + " --v " +
             quote(to_string(*s.v)) + " --w " + quote(to_string(*s.w));
}

inline std::string factors_string(const std::vector<Integer>& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ',';
    s += f[i].str();
  }
  return s;
}

inline void run_h2_random(const Scenario& s, ScenarioReport& r) {
  const std::size_t n = s.length.value_or(4);
  if (n < 1) throw InadmissiblePlan("--length must be >= 1");
  r.parameters["length"] = n;
  r.parameters["trials"] = s.trials;
  SurjectivityReport sr = verify_surjectivity(s.group, n, s.seed, s.trials);
  const std::string total = std::to_string(s.trials) + "/" + std::to_string(s.trials);
  r.add_check("i0/i1 round trip through mv_preimage", total,
              std::to_string(s.trials - sr.failures.size()) + "/" + std::to_string(s.trials),
              sr.ok());
  SNFResult snf = smith_normal_form(combined_map_matrix(n));
  auto f = snf.invariant_factors();
  bool units = std::all_of(f.begin(), f.end(), [](const Integer& x) { return x == 1; });
  r.add_check("combined map invariant factors all 1", "all 1", factors_string(f), units);
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < sr.failures.size() && i < 10; ++i)
    failures.push_back({{"trial", sr.failures[i].trial},
                        {"v", to_string(sr.failures[i].v)},
                        {"w", to_string(sr.failures[i].w)},
                        {"u", to_string(sr.failures[i].u)}});
  r.outputs["failures"] = failures;
  add_h2_assumptions(r);
  r.replay = std::string("verify-h2-random --group ") + to_string(s.group) + " --seed " +
             std::to_string(s.seed) + " --length " + std::to_string(n) + " --trials " +
             std::to_string(s.trials);
}

inline void run_h2_exhaustive(const Scenario& s, ScenarioReport& r) {
  const std::size_t n = s.length.value_or(1);
  if (!s.group.is_finite())
    throw InadmissiblePlan("verify-h2-exhaustive needs a finite group, got " + to_string(s.group));
  r.parameters["length"] = n;
  r.parameters["trials"] = s.trials;
  bool exhaustive = exhaustive_image_check(s.group, n);
  SurjectivityReport sr = verify_surjectivity(s.group, n, s.seed, s.trials);
  r.add_check("exhaustive image covers A^N x A^N", "true", exhaustive ? "true" : "false",
              exhaustive);
  r.add_check("agrees with randomized round trip", exhaustive ? "0 failures" : "failures",
              std::to_string(sr.failures.size()) + " failures", exhaustive == sr.ok());
  add_h2_assumptions(r);
  r.replay = std::string("verify-h2-exhaustive --group ") + to_string(s.group) + " --seed " +
             std::to_string(s.seed) + " --length " + std::to_string(n) + " --trials " +
             std::to_string(s.trials);
}

inline void run_snf(const Scenario& s, ScenarioReport& r) {
  if (!s.matrix) throw DomainError("snf needs --matrix");
  const IntegerMatrix& a = *s.matrix;
  r.inputs["matrix"] = to_string(a);
  SNFResult res = smith_normal_form(a);
  SNFContract c = check_snf(a, res);
  auto yes = [](bool b) { return std::string(b ? "true" : "false"); };
  r.add_check("U*A*V = D", "true", yes(c.product_matches), c.product_matches);
  r.add_check("|det U| = 1", "true", yes(c.u_unimodular), c.u_unimodular);
  r.add_check("|det V| = 1", "true", yes(c.v_unimodular), c.v_unimodular);
  r.add_check("D diagonal with divisibility chain", "true", yes(c.diagonal_chain),
              c.diagonal_chain);
  r.outputs["invariant_factors"] = factors_string(res.invariant_factors());
  r.outputs["D"] = to_string(res.D);
  r.outputs["U"] = to_string(res.U);
  r.outputs["V"] = to_string(res.V);
  r.replay = "snf --matrix <path>";
}

}  // namespace detail

/// Runs a scenario. Inadmissible parameters raise InadmissiblePlan naming
/// the violated bound; everything else lands in the report.
inline ScenarioReport run_scenario(const Scenario& s) {
  ScenarioReport r;
  r.kind = s.kind;
  r.group = to_string(s.group);
  r.seed = s.seed;
  const auto start = std::chrono::steady_clock::now();
  switch (s.kind) {
    case ScenarioKind::pi1_single: detail::run_pi1_single(s, r); break;
    case ScenarioKind::pi1_random: detail::run_pi1_random(s, r); break;
    case ScenarioKind::h2_single: detail::run_h2_single(s, r); break;
    case ScenarioKind::h2_random: detail::run_h2_random(s, r); break;
    case ScenarioKind::h2_exhaustive: detail::run_h2_exhaustive(s, r); break;
    case ScenarioKind::snf: detail::run_snf(s, r); break;
  }
  r.finish();
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
  return r;
}

enum class ReportFormat { human, json };

inline constexpr const char* kReportSchema = "snakecone-report/1";

inline nlohmann::ordered_json report_json(const ScenarioReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["scenario"] = {{"kind", kind_name(r.kind)},
                   {"command", command_name(r.kind)},
                   {"group", r.group},
                   {"seed", r.seed},
                   {"inputs", r.inputs},
                   {"parameters", r.parameters}};
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"pass", c.pass}});
  j["checks"] = checks;
  j["outputs"] = r.outputs;
  j["assumptions"] = r.assumptions;
  j["verdict"] = r.verdict;
  j["timing_ms"] = r.timing_ms;
  j["replay"] = r.replay;
  return j;
}

inline std::string emit_report(const ScenarioReport& r, ReportFormat format) {
  if (format == ReportFormat::json) return report_json(r).dump(2) + "\n";
  std::string s = std::string(command_name(r.kind)) + " (" + kind_name(r.kind) +
                  ")  group " + r.group + "  seed " + std::to_string(r.seed) + "\n";
  for (const auto& c : r.checks) {
    s += c.pass ? "  PASS  " : "  FAIL  ";
    s += c.name;
    if (c.pass)
      s += "    [" + c.computed + "]\n";
    else
      s += "\n          expected: " + c.expected + "\n          computed: " + c.computed + "\n";
  }
  for (const auto& a : r.assumptions) s += "  assume  " + a + "\n";
  for (const auto& [key, value] : r.outputs.items()) {
    if (value.is_string()) {
      std::string v = value.get<std::string>();
      if (v.find('\n') != std::string::npos) {
        s += "  " + key + ":\n";
        std::size_t pos = 0;
        while (pos < v.size()) {
          std::size_t eol = v.find('\n', pos);
          s += "    " + v.substr(pos, eol - pos) + "\n";
          pos = eol == std::string::npos ? v.size() : eol + 1;
        }
      } else {
        s += "  " + key + " = " + v + "\n";
      }
    } else if (!value.empty()) {
      s += "  " + key + " = " + value.dump() + "\n";
    }
  }
  s += std::string("verdict: ") + (r.verdict ? "PASS" : "FAIL") + "\n";
  s += "replay: " + r.replay + "\n";
  return s;
}

}  // namespace snakecone
