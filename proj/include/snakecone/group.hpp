#pragma once

// Base groups with decidable word problems. These serve as the factor
// groups of the free products in sigma_word.hpp and as the coefficient
// groups of the sequences in abelian_homology.hpp.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "snakecone/error.hpp"

namespace snakecone {

enum class GroupKind { trivial, free, free_abelian, cyclic, finite_abelian };

/// Structural description of a base group. Construction normalizes every
/// presentation of the trivial group to `trivial()`, and a finite abelian
/// group with a single invariant factor to the matching cyclic group, so
/// that `==` is equality of groups.
class GroupDescriptor {
 public:
  GroupDescriptor() = default;

  static GroupDescriptor trivial() { return {}; }

  static GroupDescriptor free(std::int64_t rank) {
    if (rank < 0) throw DomainError("free group rank must be >= 0");
    if (rank == 0) return trivial();
    return GroupDescriptor(GroupKind::free, {rank});
  }

  static GroupDescriptor free_abelian(std::int64_t rank) {
    if (rank < 0) throw DomainError("free abelian rank must be >= 0");
    if (rank == 0) return trivial();
    return GroupDescriptor(GroupKind::free_abelian, {rank});
  }

  static GroupDescriptor cyclic(std::int64_t modulus) {
    if (modulus < 1) throw DomainError("cyclic modulus must be >= 1");
    if (modulus == 1) return trivial();
    return GroupDescriptor(GroupKind::cyclic, {modulus});
  }

  /// Invariant factors d1 | d2 | ... | dt, each >= 2.
  static GroupDescriptor finite_abelian(std::vector<std::int64_t> factors) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i] < 2) throw DomainError("invariant factors must be >= 2");
      if (i > 0 && factors[i] % factors[i - 1] != 0)
        throw DomainError("invariant factors must form a divisibility chain");
    }
    if (factors.empty()) return trivial();
    if (factors.size() == 1) return cyclic(factors.front());
    return GroupDescriptor(GroupKind::finite_abelian, std::move(factors));
  }

  GroupKind kind() const noexcept { return kind_; }

  bool is_abelian() const noexcept { return kind_ != GroupKind::free; }

  /// Generator count for free groups; coordinate count for abelian kinds.
  std::size_t rank() const noexcept {
    switch (kind_) {
      case GroupKind::trivial: return 0;
      case GroupKind::free:
      case GroupKind::free_abelian: return static_cast<std::size_t>(params_[0]);
      case GroupKind::cyclic: return 1;
      case GroupKind::finite_abelian: return params_.size();
    }
    return 0;
  }

  /// Moduli of the coordinates for the torsion kinds; 0 marks a free coordinate.
  std::int64_t modulus(std::size_t coordinate) const {
    switch (kind_) {
      case GroupKind::cyclic: return params_[0];
      case GroupKind::finite_abelian: return params_.at(coordinate);
      default: return 0;
    }
  }

  bool is_finite() const noexcept {
    return kind_ == GroupKind::trivial || kind_ == GroupKind::cyclic ||
           kind_ == GroupKind::finite_abelian;
  }

  /// Group order for finite kinds, 0 for infinite ones. Throws if the order
  /// does not fit in int64.
  std::int64_t order() const {
    if (!is_finite()) return 0;
    std::int64_t n = 1;
    for (std::size_t i = 0; i < rank(); ++i)
      if (__builtin_mul_overflow(n, modulus(i), &n))
        throw OverflowError("group order exceeds int64");
    return n;
  }

  const std::vector<std::int64_t>& parameters() const noexcept { return params_; }

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;

 private:
  GroupDescriptor(GroupKind kind, std::vector<std::int64_t> params)
      : kind_(kind), params_(std::move(params)) {}

  GroupKind kind_ = GroupKind::trivial;
  std::vector<std::int64_t> params_;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coordinate overflow");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
  std::int64_t r;
  if (__builtin_sub_overflow(std::int64_t{0}, a, &r))
    throw OverflowError("coordinate overflow");
  return r;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Free reduction of a signed generator string by one cancellation stack.
inline std::vector<std::int64_t> free_reduce(std::span<const std::int64_t> letters) {
  std::vector<std::int64_t> out;
  out.reserve(letters.size());
  for (std::int64_t x : letters) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

}  // namespace detail

/// An element of the group named by its descriptor, always held in normal
/// form:
///   free          reduced string of signed generators +-1 .. +-rank
///   free_abelian  integer vector
///   cyclic        residue in [0, k)
///   finite_abelian  residues in [0, d_i)
///   trivial       empty payload
class GroupElement {
 public:
  GroupElement() = default;

  /// Normalizes `payload` and validates it against `d`.
  GroupElement(GroupDescriptor d, std::vector<std::int64_t> payload)
      : descriptor_(std::move(d)), payload_(std::move(payload)) {
    normalize();
  }

  static GroupElement identity(const GroupDescriptor& d) {
    std::vector<std::int64_t> p;
    if (d.is_abelian()) p.assign(d.rank(), 0);
    return GroupElement(d, std::move(p));
  }

  /// The i-th generator (0-based) of a free or abelian group.
  static GroupElement generator(const GroupDescriptor& d, std::size_t i) {
    if (i >= d.rank()) throw DomainError("generator index out of range");
    if (d.kind() == GroupKind::free)
      return GroupElement(d, {static_cast<std::int64_t>(i + 1)});
    std::vector<std::int64_t> p(d.rank(), 0);
    p[i] = 1;
    return GroupElement(d, std::move(p));
  }

  const GroupDescriptor& descriptor() const noexcept { return descriptor_; }
  const std::vector<std::int64_t>& payload() const noexcept { return payload_; }

  bool is_identity() const noexcept {
    if (descriptor_.kind() == GroupKind::free) return payload_.empty();
    for (std::int64_t c : payload_)
      if (c != 0) return false;
    return true;
  }

  GroupElement inverse() const {
    GroupElement r = *this;
    if (descriptor_.kind() == GroupKind::free) {
      std::vector<std::int64_t> p(payload_.rbegin(), payload_.rend());
      for (auto& x : p) x = -x;
      r.payload_ = std::move(p);
      return r;
    }
    for (std::size_t i = 0; i < r.payload_.size(); ++i) {
      std::int64_t m = descriptor_.modulus(i);
      r.payload_[i] = m == 0 ? detail::checked_neg(payload_[i])
                             : detail::floor_mod(-payload_[i], m);
    }
    return r;
  }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    if (a.descriptor_ != b.descriptor_)
      throw DescriptorMismatch("multiply: elements of different groups");
    GroupElement r = a;
    if (a.descriptor_.kind() == GroupKind::free) {
      // Both operands are reduced, so cancellation only happens at the seam.
      auto& p = r.payload_;
      std::size_t j = 0;
      while (j < b.payload_.size() && !p.empty() && p.back() == -b.payload_[j]) {
        p.pop_back();
        ++j;
      }
      p.insert(p.end(), b.payload_.begin() + static_cast<std::ptrdiff_t>(j),
               b.payload_.end());
      return r;
    }
    for (std::size_t i = 0; i < r.payload_.size(); ++i) {
      std::int64_t m = a.descriptor_.modulus(i);
      r.payload_[i] = m == 0 ? detail::checked_add(a.payload_[i], b.payload_[i])
                             : (a.payload_[i] >= m - b.payload_[i] ? a.payload_[i] - (m - b.payload_[i])
                                                                 : a.payload_[i] + b.payload_[i]);
    }
    return r;
  }

  GroupElement& operator*=(const GroupElement& b) { return *this = *this * b; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  void normalize() {
    const auto& d = descriptor_;
    if (d.kind() == GroupKind::free) {
      const auto r = static_cast<std::int64_t>(d.rank());
      for (std::int64_t x : payload_)
        if (x == 0 || x > r || x < -r)
          throw DomainError("free generator outside 1.." + std::to_string(r));
      payload_ = detail::free_reduce(payload_);
      return;
    }
    if (payload_.size() != d.rank())
      throw DomainError("element has " + std::to_string(payload_.size()) +
                        " coordinates, group needs " + std::to_string(d.rank()));
    for (std::size_t i = 0; i < payload_.size(); ++i)
      if (std::int64_t m = d.modulus(i); m != 0) payload_[i] = detail::floor_mod(payload_[i], m);
  }

  GroupDescriptor descriptor_;
  std::vector<std::int64_t> payload_;
};

inline GroupElement identity(const GroupDescriptor& d) { return GroupElement::identity(d); }
inline GroupElement multiply(const GroupElement& a, const GroupElement& b) { return a * b; }
inline GroupElement invert(const GroupElement& a) { return a.inverse(); }
inline bool is_identity(const GroupElement& a) { return a.is_identity(); }

/// Uniform-ish random element: free words of length 0..max_len over the
/// generators, abelian coordinates in [-bound, bound] or the residue range.
template <class Rng>
GroupElement random_element(const GroupDescriptor& d, Rng& rng, int max_len = 4,
                            std::int64_t bound = 5) {
  std::vector<std::int64_t> p;
  if (d.kind() == GroupKind::free) {
    const auto r = static_cast<std::int64_t>(d.rank());
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<std::int64_t> gen(1, r);
    std::bernoulli_distribution sign(0.5);
    for (int n = len(rng); n > 0; --n) p.push_back(sign(rng) ? gen(rng) : -gen(rng));
  } else {
    for (std::size_t i = 0; i < d.rank(); ++i) {
      std::int64_t m = d.modulus(i);
      std::uniform_int_distribution<std::int64_t> c(m == 0 ? -bound : 0,
                                                    m == 0 ? bound : m - 1);
      p.push_back(c(rng));
    }
  }
  return GroupElement(d, std::move(p));
}

/// Random element that is not the identity. The group must be non-trivial.
template <class Rng>
GroupElement random_nonidentity(const GroupDescriptor& d, Rng& rng) {
  if (d.kind() == GroupKind::trivial)
    throw DomainError("trivial group has no non-identity element");
  for (;;) {
    GroupElement g = random_element(d, rng);
    if (!g.is_identity()) return g;
  }
}

}  // namespace snakecone
