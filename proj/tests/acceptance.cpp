// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "snakecone/snakecone.hpp"

using namespace snakecone;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const GroupDescriptor kFree2 = GroupDescriptor::free(2);
const GroupDescriptor kCyclic6 = GroupDescriptor::cyclic(6);
const GroupDescriptor kAbelian2 = GroupDescriptor::free_abelian(2);

// 1. Word identities for random reduced words, M = max(8, max_index), k = M + 1.
Outcome theorem1_core() {
  constexpr int kWordsPerGroup = 1000;
  constexpr double kBudgetSeconds = 10.0;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(0xA11CE);
  std::uniform_int_distribution<std::size_t> len(0, 16);
  std::uniform_int_distribution<std::int64_t> top(1, 8);
  std::size_t cases = 0, failures = 0, nonempty = 0;
  for (const auto& d : {kFree2, kCyclic6, kAbelian2}) {
    for (int t = 0; t < kWordsPerGroup; ++t) {
      SigmaWord w = random_word(d, top(rng), len(rng), rng);
      const std::int64_t M = std::max<std::int64_t>(8, max_index(w)), k = M + 1;
      Pi1Report r = verify_theorem1(w, k, M);
      ++cases;
      nonempty += !w.empty();
      if (!r.verdict) ++failures;
    }
  }
  const double secs = seconds_since(t0);
  return {failures == 0 && cases >= 1000 && secs < kBudgetSeconds,
          std::to_string(cases - failures) + "/" + std::to_string(cases) + " verdicts true (" +
              std::to_string(nonempty) + " non-empty), " + std::to_string(secs) + " s"};
}

// 2. i0(g_2m^-1 g_2m+1) = e and i1(g_2m-1^-1 g_2m) = e.
Outcome pair_cancellation() {
  const auto& maps = snake_maps();
  std::mt19937_64 rng(0xCA7);
  std::size_t checks = 0, failures = 0;
  for (const auto& d : {kFree2, kCyclic6, kAbelian2}) {
    for (int s = 0; s < 100; ++s) {
      const GroupElement g = random_nonidentity(d, rng), gi = g.inverse();
      for (std::int64_t m = 1; m <= 1000; ++m) {
        SigmaWord p0 = reduce({{Family::C, 2 * m, gi}, {Family::C, 2 * m + 1, g}}, d);
        SigmaWord p1 = reduce({{Family::C, 2 * m - 1, gi}, {Family::C, 2 * m, g}}, d);
        failures += !apply_hom(maps.i0, p0).empty();
        failures += !apply_hom(maps.i1, p1).empty();
        checks += 2;
      }
    }
  }
  return {failures == 0, std::to_string(failures) + " failures in " + std::to_string(checks)};
}

// 3. Round trip through the telescoping preimage.
Outcome surjectivity_round_trip() {
  constexpr double kBudgetSeconds = 5.0;
  constexpr std::size_t kTrialsPerGroup = 10000;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(0x5EED);
  std::uniform_int_distribution<std::size_t> len(1, 16);
  std::size_t cases = 0, failures = 0;
  for (const auto& d : {GroupDescriptor::free_abelian(1), GroupDescriptor::free_abelian(2),
                        GroupDescriptor::cyclic(2), GroupDescriptor::cyclic(6)}) {
    for (std::size_t t = 0; t < kTrialsPerGroup; ++t) {
      const std::size_t n = len(rng);
      AbelianSequence v = random_sequence(d, n, rng), w = random_sequence(d, n, rng);
      AbelianSequence u = mv_preimage(v, w);
      ++cases;
      if (i0_seq(u) != v || i1_seq(u) != w) ++failures;
    }
  }
  const double secs = seconds_since(t0);
  return {failures == 0 && secs < kBudgetSeconds,
          std::to_string(failures) + " failures in " + std::to_string(cases) + ", " +
              std::to_string(secs) + " s"};
}

// 4. Exhaustive enumeration agrees with the randomized round trip.
Outcome exhaustive_oracle() {
  struct Case {
    GroupDescriptor d;
    std::size_t n;
  };
  const std::vector<Case> cases = {{GroupDescriptor::cyclic(2), 1}, {GroupDescriptor::cyclic(2), 2},
                                   {GroupDescriptor::cyclic(2), 3}, {GroupDescriptor::cyclic(3), 1},
                                   {GroupDescriptor::cyclic(3), 2}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    const bool exhaustive = exhaustive_image_check(c.d, c.n);
    const bool randomized = verify_surjectivity(c.d, c.n, 4, 1000).ok();
    ok = ok && exhaustive && exhaustive == randomized;
    detail += "Z/" + std::to_string(c.d.modulus(0)) + " N=" + std::to_string(c.n) +
              (exhaustive ? " onto" : " NOT onto") + (exhaustive == randomized ? "" : " (disagree)") +
              "; ";
  }
  return {ok, detail};
}

// 5. SNF certificate for the combined map and the SNF contract itself.
Outcome snf_certification() {
  std::size_t bad_sizes = 0;
  for (std::size_t n = 1; n <= 64; ++n) {
    auto f = smith_normal_form(combined_map_matrix(n)).invariant_factors();
    for (const auto& x : f)
      if (x != 1) {
        ++bad_sizes;
        break;
      }
  }
  std::mt19937_64 rng(0x5AF);
  std::uniform_int_distribution<std::size_t> sz(1, 8);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::size_t contract_failures = 0;
  for (int t = 0; t < 100; ++t) {
    IntegerMatrix a(sz(rng), sz(rng));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    if (!check_snf(a, smith_normal_form(a)).ok()) ++contract_failures;
  }
  return {bad_sizes == 0 && contract_failures == 0,
          "N<=64: " + std::to_string(64 - bad_sizes) + "/64 unimodular; contract " +
              std::to_string(100 - contract_failures) + "/100"};
}

// 6. Stack reduction vs repeated-pass oracle; free product group laws.
Outcome reduction_soundness() {
  std::mt19937_64 rng(0x4ED);
  std::uniform_int_distribution<std::size_t> len(0, 64);
  std::uniform_int_distribution<std::int64_t> idx(1, 4);
  std::uniform_int_distribution<int> fam(0, 2);
  const Family fs[] = {Family::C, Family::A, Family::B};
  auto raw_word = [&](const GroupDescriptor& d, std::size_t n) {
    std::vector<Letter> raw(n);
    for (auto& l : raw) l = {fs[fam(rng)], idx(rng), random_element(d, rng, 2, 2)};
    return raw;
  };
  std::size_t mismatches = 0, law_failures = 0;
  const GroupDescriptor groups[] = {kFree2, GroupDescriptor::cyclic(2), kAbelian2};
  for (int t = 0; t < 10000; ++t) {
    const auto& d = groups[t % 3];
    auto raw = raw_word(d, len(rng));
    if (reduce(raw, d).letters() != oracle::naive_reduce(raw)) ++mismatches;
  }
  for (int t = 0; t < 10000; ++t) {
    const auto& d = groups[t % 3];
    SigmaWord u = reduce(raw_word(d, 12), d), v = reduce(raw_word(d, 12), d),
              w = reduce(raw_word(d, 12), d);
    bool ok = concat(concat(u, v), w) == concat(u, concat(v, w)) &&
              concat(u, SigmaWord(d)) == u && concat(SigmaWord(d), u) == u &&
              concat(u, invert_word(u)).empty() && invert_word(invert_word(u)) == u &&
              invert_word(concat(u, v)) == concat(invert_word(v), invert_word(u));
    law_failures += !ok;
  }
  return {mismatches == 0 && law_failures == 0,
          std::to_string(mismatches) + " oracle mismatches / 10000, " +
              std::to_string(law_failures) + " law failures / 10000"};
}

// 7. Abelianized word maps satisfy the sequence-map coordinate formulas.
Outcome cross_section_consistency() {
  const auto& maps = snake_maps();
  std::mt19937_64 rng(0xC0DE);
  std::uniform_int_distribution<std::size_t> len(0, 16);
  std::size_t failures = 0;
  const GroupDescriptor groups[] = {kAbelian2, kCyclic6, GroupDescriptor::free_abelian(1)};
  for (int t = 0; t < 1000; ++t) {
    const auto& d = groups[t % 3];
    constexpr std::size_t kN = 6;  // C-indices up to 2N
    SigmaWord w = random_word(d, 2 * kN, len(rng), rng);
    auto cs = oracle::exponent_sums(w);
    std::vector<GroupElement> coords;
    for (std::size_t i = 1; i <= 2 * kN; ++i)
      coords.push_back(oracle::sum_at(cs, static_cast<std::int64_t>(i), d));
    AbelianSequence u(d, coords);
    AbelianSequence via_seq0 = i0_seq(u), via_seq1 = i1_seq(u);
    auto as = oracle::exponent_sums(apply_hom(maps.i0, w));
    auto bs = oracle::exponent_sums(apply_hom(maps.i1, w));
    for (std::size_t m = 1; m <= kN; ++m) {
      auto mi = static_cast<std::int64_t>(m);
      failures += oracle::sum_at(as, mi, d) != via_seq0[m - 1];
      failures += oracle::sum_at(bs, mi, d) != via_seq1[m - 1];
    }
  }
  return {failures == 0, std::to_string(failures) + " coordinate mismatches over 1000 words"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "word identities W -> W*, W0, W0* (1000 words x 3 groups, < 10 s)", theorem1_core},
      {"AC2", "pair-cancellation laws, m <= 1000, 100 g per group", pair_cancellation},
      {"AC3", "telescoping preimage round trip (10^4 x 4 groups, < 5 s)", surjectivity_round_trip},
      {"AC4", "exhaustive image oracle agrees", exhaustive_oracle},
      {"AC5", "SNF certificate N <= 64 and SNF contract", snf_certification},
      {"AC6", "reduction vs naive oracle, free product laws", reduction_soundness},
      {"AC7", "abelianized word maps match sequence formulas", cross_section_consistency},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("[%s] %s %s -- %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed),
              criteria.size());
  return failed == 0 ? 0 : 1;
}
