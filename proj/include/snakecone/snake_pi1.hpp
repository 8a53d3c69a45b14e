#pragma once

// Word identities behind the simple connectivity of the Snake cone.
//
// The intersection Y0 ∩ Y1 has fundamental group the free product of
// copies G_{C,n}, n >= 1, and Y0, Y1 have the free products of copies
// G_{A,m}, G_{B,m}. Inclusions i0, i1 act letterwise:
//
//   i0: C1 -> A1,  Cn -> A(floor(n/2) + 1)   (C2m, C2m+1 share A(m+1))
//   i1: Cn -> B(ceil(n/2))                   (C2m-1, C2m share Bm)
//
// For a word W we insert alternating tails after its odd-index letters to
// get W*, delete the odd letters to get W0, insert tails after the even
// letters of W0 to get W0*, and check the four identities that imply
// i(W) = e in the pushout. Infinite tails are truncated to 2k letters; the
// single surviving letter of each truncated tail sits beyond the horizon M
// whenever k > M >= max_index(W), and is removed by project_horizon.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "snakecone/error.hpp"
#include "snakecone/sigma_word.hpp"

namespace snakecone {

inline std::int64_t i0_index(std::int64_t n) { return n == 1 ? 1 : n / 2 + 1; }
inline std::int64_t i1_index(std::int64_t n) { return (n + 1) / 2; }

struct SnakeMaps {
  StandardHom i0;
  StandardHom i1;

  static SnakeMaps make() {
    return {StandardHom::relabeling("i0", Family::C, Family::A, i0_index),
            StandardHom::relabeling("i1", Family::C, Family::B, i1_index)};
  }
};

inline const SnakeMaps& snake_maps() {
  static const SnakeMaps maps = SnakeMaps::make();
  return maps;
}

enum class Parity { odd, even };

inline bool has_parity(std::int64_t n, Parity p) noexcept {
  return (n % 2 != 0) == (p == Parity::odd);
}

inline const char* to_string(Parity p) noexcept { return p == Parity::odd ? "odd" : "even"; }

struct InsertionPlan {
  Parity parity = Parity::odd;
  std::int64_t depth = 1;    // each tail has 2 * depth letters
  std::int64_t horizon = 1;

  bool admissible_for(const SigmaWord& w) const noexcept {
    return horizon >= 1 && horizon >= max_index(w) && depth > horizon;
  }
};

/// The truncated tail g_n^-1 g_{n+1} g_{n+2}^-1 ... of exactly 2k letters in
/// family C, starting with an inverted letter.
inline SigmaWord build_U(std::int64_t n, const GroupElement& g, std::int64_t k) {
  if (n < 1) throw DomainError("build_U: n must be >= 1");
  if (k < 1) throw DomainError("build_U: depth must be >= 1");
  if (g.is_identity()) throw DomainError("build_U: tail element must be non-identity");
  const GroupElement ginv = g.inverse();
  std::vector<Letter> raw;
  raw.reserve(static_cast<std::size_t>(2 * k));
  for (std::int64_t j = 0; j < 2 * k; ++j)
    raw.push_back({Family::C, n + j, j % 2 == 0 ? ginv : g});
  return reduce(std::move(raw), g.descriptor());
}

/// Insert build_U(n + 1, g, k) immediately after every letter (C, n, g)
/// whose index n has the given parity.
inline SigmaWord insert_tails(const SigmaWord& w, Parity parity, std::int64_t k) {
  std::vector<Letter> raw;
  for (const auto& l : w) {
    if (l.family != Family::C) throw DomainError("insert_tails: word must be over family C");
    raw.push_back(l);
    if (has_parity(l.index, parity)) {
      SigmaWord tail = build_U(l.index + 1, l.element, k);
      raw.insert(raw.end(), tail.begin(), tail.end());
    }
  }
  return reduce(std::move(raw), w.descriptor());
}

/// Delete every letter whose index has the given parity, then reduce.
inline SigmaWord delete_parity(const SigmaWord& w, Parity parity) {
  std::vector<Letter> raw;
  for (const auto& l : w)
    if (!has_parity(l.index, parity)) raw.push_back(l);
  return reduce(std::move(raw), w.descriptor());
}

struct WordCheck {
  std::string name;
  SigmaWord expected;
  SigmaWord computed;
  bool pass = false;
};

inline constexpr std::array<const char*, 4> kPi1CheckNames = {
    "i0(W*) = i0(W)",
    "i1(W*) = i1(W0) mod horizon",
    "i1(W0*) = i1(W0)",
    "i0(W0*) = e mod horizon",
};

struct Pi1Report {
  SigmaWord word;
  InsertionPlan odd_plan;   // builds W* from W
  InsertionPlan even_plan;  // builds W0* from W0
  SigmaWord w_star, w0, w0_star;
  std::vector<WordCheck> checks;
  bool verdict = false;
};

inline Pi1Report verify_theorem1(const SigmaWord& w, std::int64_t k, std::int64_t M) {
  Pi1Report r;
  r.word = w;
  r.odd_plan = {Parity::odd, k, M};
  r.even_plan = {Parity::even, k, M};
  if (!r.odd_plan.admissible_for(w))
    throw InadmissiblePlan("inadmissible plan: need depth > horizon >= max_index(word) = " +
                           std::to_string(max_index(w)) + ", got depth " + std::to_string(k) +
                           ", horizon " + std::to_string(M));
  for (const auto& l : w)
    if (l.family != Family::C) throw DomainError("verify_theorem1: word must be over family C");

  const auto& maps = snake_maps();
  r.w_star = insert_tails(w, Parity::odd, k);
  r.w0 = delete_parity(w, Parity::odd);
  r.w0_star = insert_tails(r.w0, Parity::even, k);

  auto add = [&](const char* name, SigmaWord expected, SigmaWord computed) {
    bool pass = expected == computed;
    r.checks.push_back({name, std::move(expected), std::move(computed), pass});
  };
  add(kPi1CheckNames[0], apply_hom(maps.i0, w), apply_hom(maps.i0, r.w_star));
  add(kPi1CheckNames[1], project_horizon(apply_hom(maps.i1, r.w0), M),
      project_horizon(apply_hom(maps.i1, r.w_star), M));
  add(kPi1CheckNames[2], apply_hom(maps.i1, r.w0), apply_hom(maps.i1, r.w0_star));
  add(kPi1CheckNames[3], SigmaWord(w.descriptor()),
      project_horizon(apply_hom(maps.i0, r.w0_star), M));

  r.verdict = true;
  for (const auto& c : r.checks) r.verdict = r.verdict && c.pass;
  return r;
}

}  // namespace snakecone
