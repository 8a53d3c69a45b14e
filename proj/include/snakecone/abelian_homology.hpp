#pragma once

// The Mayer-Vietoris step for H_n of the Snake cone at finite truncation.
//
// H_n(Y0 ∩ Y1), H_n(Y0), H_n(Y1) are sequences over a coefficient group
// A = H_n(Z), indexed by the C-, A- and B-copies respectively. With u of
// length 2N:
//
//   i0(u)(1) = u(1),  i0(u)(m) = u(2m-1) + u(2m-2)  (2 <= m <= N)
//   i1(u)(m) = u(2m-1) + u(2m)                      (1 <= m <= N)
//
// and the preimage of (v, w) is given by partial sums. Indices in comments
// are 1-based; code is 0-based.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "snakecone/error.hpp"
#include "snakecone/group.hpp"
#include "snakecone/smith.hpp"

namespace snakecone {

class AbelianSequence {
 public:
  AbelianSequence(GroupDescriptor d, std::vector<GroupElement> entries)
      : descriptor_(std::move(d)), entries_(std::move(entries)) {
    if (!descriptor_.is_abelian())
      throw DomainError("sequence coefficients must be an abelian group");
    if (entries_.empty()) throw DomainError("sequence length must be >= 1");
    for (const auto& e : entries_)
      if (e.descriptor() != descriptor_)
        throw DescriptorMismatch("sequence entry over a different group");
  }

  static AbelianSequence zero(const GroupDescriptor& d, std::size_t length) {
    return AbelianSequence(d, std::vector<GroupElement>(length, GroupElement::identity(d)));
  }

  const GroupDescriptor& descriptor() const noexcept { return descriptor_; }
  std::size_t length() const noexcept { return entries_.size(); }
  const std::vector<GroupElement>& entries() const noexcept { return entries_; }
  const GroupElement& operator[](std::size_t i) const { return entries_[i]; }

  friend AbelianSequence operator+(const AbelianSequence& a, const AbelianSequence& b) {
    if (a.descriptor_ != b.descriptor_) throw DescriptorMismatch("sequence sum: groups differ");
    if (a.length() != b.length()) throw DomainError("sequence sum: lengths differ");
    std::vector<GroupElement> e;
    e.reserve(a.length());
    for (std::size_t i = 0; i < a.length(); ++i) e.push_back(a[i] * b[i]);
    return AbelianSequence(a.descriptor_, std::move(e));
  }

  friend bool operator==(const AbelianSequence&, const AbelianSequence&) = default;

 private:
  GroupDescriptor descriptor_;
  std::vector<GroupElement> entries_;
};

template <class Rng>
AbelianSequence random_sequence(const GroupDescriptor& d, std::size_t length, Rng& rng) {
  std::vector<GroupElement> e;
  e.reserve(length);
  for (std::size_t i = 0; i < length; ++i) e.push_back(random_element(d, rng));
  return AbelianSequence(d, std::move(e));
}

namespace detail {
inline std::size_t half_length(const AbelianSequence& u, const char* op) {
  if (u.length() % 2 != 0)
    throw DomainError(std::string(op) + ": sequence length must be even, got " +
                      std::to_string(u.length()));
  return u.length() / 2;
}
}  // namespace detail

inline AbelianSequence i0_seq(const AbelianSequence& u) {
  const std::size_t n = detail::half_length(u, "i0_seq");
  std::vector<GroupElement> out;
  out.reserve(n);
  out.push_back(u[0]);
  for (std::size_t m = 2; m <= n; ++m) out.push_back(u[2 * m - 2] * u[2 * m - 3]);
  return AbelianSequence(u.descriptor(), std::move(out));
}

inline AbelianSequence i1_seq(const AbelianSequence& u) {
  const std::size_t n = detail::half_length(u, "i1_seq");
  std::vector<GroupElement> out;
  out.reserve(n);
  for (std::size_t m = 1; m <= n; ++m) out.push_back(u[2 * m - 2] * u[2 * m - 1]);
  return AbelianSequence(u.descriptor(), std::move(out));
}

/// Telescoping preimage of (v, w) under i0_seq + i1_seq:
///   u(2m-1) = sum_{k<=m} v(k) - sum_{k<=m-1} w(k)
///   u(2m)   = sum_{k<=m} w(k) - sum_{k<=m} v(k)
inline AbelianSequence mv_preimage(const AbelianSequence& v, const AbelianSequence& w) {
  if (v.descriptor() != w.descriptor()) throw DescriptorMismatch("mv_preimage: groups differ");
  if (v.length() != w.length()) throw DomainError("mv_preimage: lengths differ");
  const auto& d = v.descriptor();
  GroupElement sv = GroupElement::identity(d), sw = sv;
  std::vector<GroupElement> u;
  u.reserve(2 * v.length());
  for (std::size_t m = 0; m < v.length(); ++m) {
    sv *= v[m];
    u.push_back(sv * sw.inverse());  // sw still excludes w(m)
    sw *= w[m];
    u.push_back(sw * sv.inverse());
  }
  return AbelianSequence(d, std::move(u));
}

struct SurjectivityFailure {
  std::size_t trial = 0;
  AbelianSequence v, w, u;
};

struct SurjectivityReport {
  GroupDescriptor descriptor;
  std::size_t length = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<SurjectivityFailure> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Samples (v, w), builds the telescoping preimage and checks the round
/// trip. Failures are collected, not thrown.
inline SurjectivityReport verify_surjectivity(const GroupDescriptor& d, std::size_t length,
                                              std::uint64_t seed, std::size_t trials) {
  if (!d.is_abelian()) throw DomainError("verify_surjectivity: abelian group required");
  if (length < 1) throw DomainError("verify_surjectivity: length must be >= 1");
  SurjectivityReport r{d, length, seed, trials, {}};
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    AbelianSequence v = random_sequence(d, length, rng);
    AbelianSequence w = random_sequence(d, length, rng);
    AbelianSequence u = mv_preimage(v, w);
    if (i0_seq(u) != v || i1_seq(u) != w) r.failures.push_back({t, v, w, u});
  }
  return r;
}

inline constexpr std::int64_t kExhaustiveStateBound = 1'000'000;

namespace detail {

/// All elements of a finite abelian group, in lexicographic coordinate order.
inline std::vector<GroupElement> enumerate_elements(const GroupDescriptor& d) {
  std::vector<GroupElement> out;
  std::vector<std::int64_t> c(d.rank(), 0);
  for (;;) {
    out.emplace_back(d, c);
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == d.modulus(i)) c[i++] = 0;
    if (i == c.size()) break;
  }
  return out;
}

}  // namespace detail

/// Brute-force image of i0_seq (+) i1_seq on sequences of length 2N over a
/// finite abelian group; true iff every target pair (v, w) is attained.
inline bool exhaustive_image_check(const GroupDescriptor& d, std::size_t n) {
  if (!d.is_finite()) throw DomainError("exhaustive_image_check: finite abelian group required");
  if (n < 1) throw DomainError("exhaustive_image_check: length must be >= 1");
  const std::int64_t order = d.order();
  std::int64_t states = 1;
  for (std::size_t i = 0; i < 2 * n; ++i)
    if (__builtin_mul_overflow(states, order, &states) || states > kExhaustiveStateBound)
      throw DomainError("exhaustive_image_check: |A|^(2N) exceeds " +
                        std::to_string(kExhaustiveStateBound));

  const auto elems = detail::enumerate_elements(d);
  std::vector<std::size_t> digits(2 * n, 0);
  std::set<std::vector<std::vector<std::int64_t>>> hits;
  for (;;) {
    std::vector<GroupElement> e;
    e.reserve(2 * n);
    for (auto k : digits) e.push_back(elems[k]);
    AbelianSequence u(d, std::move(e));
    const AbelianSequence a = i0_seq(u), b = i1_seq(u);
    std::vector<std::vector<std::int64_t>> key;
    for (const auto& x : a.entries()) key.push_back(x.payload());
    for (const auto& x : b.entries()) key.push_back(x.payload());
    hits.insert(std::move(key));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == elems.size()) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  // The target A^N x A^N has the same cardinality as the source A^(2N).
  return static_cast<std::int64_t>(hits.size()) == states;
}

/// Matrix of i0_seq (+) i1_seq with integer coefficients: rows A1..AN then
/// B1..BN, columns C1..C2N.
inline IntegerMatrix combined_map_matrix(std::size_t n) {
  if (n < 1) throw DomainError("combined_map_matrix: N must be >= 1");
  IntegerMatrix m(2 * n, 2 * n);
  m(0, 0) = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    m(k - 1, 2 * k - 2) = 1;  // u(2k-1)
    m(k - 1, 2 * k - 3) = 1;  // u(2k-2)
  }
  for (std::size_t k = 1; k <= n; ++k) {
    m(n + k - 1, 2 * k - 2) = 1;
    m(n + k - 1, 2 * k - 1) = 1;
  }
  return m;
}

}  // namespace snakecone
