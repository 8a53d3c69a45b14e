#pragma once

// Finite words over indexed families of copies of a base group G, i.e.
// elements of a free product of countably many copies of G, together with
// reduction, horizon projection and letterwise (standard) homomorphisms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "snakecone/error.hpp"
#include "snakecone/group.hpp"

namespace snakecone {

/// Which family of copies of G a letter lives in.
enum class Family : char { C = 'C', A = 'A', B = 'B' };

inline char family_char(Family f) noexcept { return static_cast<char>(f); }

/// One letter: an element of the `index`-th copy of G in `family`.
struct Letter {
  Family family = Family::C;
  std::int64_t index = 1;
  GroupElement element;

  bool same_factor(const Letter& o) const noexcept {
    return family == o.family && index == o.index;
  }
  Letter inverse() const { return {family, index, element.inverse()}; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A reduced word: no identity letters and no two adjacent letters in the
/// same factor. The only way to obtain one is through `reduce`, so every
/// SigmaWord value satisfies the invariant.
class SigmaWord {
 public:
  explicit SigmaWord(GroupDescriptor d = {}) : descriptor_(std::move(d)) {}

  const GroupDescriptor& descriptor() const noexcept { return descriptor_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  friend bool operator==(const SigmaWord&, const SigmaWord&) = default;

  friend SigmaWord reduce(std::vector<Letter> letters, const GroupDescriptor& d);

 private:
  GroupDescriptor descriptor_;
  std::vector<Letter> letters_;
};

/// Left-to-right pass with a cancellation stack. Identity letters are
/// dropped; an incoming letter in the same factor as the stack top is
/// multiplied into it, and the top is popped if the product is trivial.
inline SigmaWord reduce(std::vector<Letter> letters, const GroupDescriptor& d) {
  SigmaWord w(d);
  auto& stack = w.letters_;
  stack.reserve(letters.size());
  for (auto& l : letters) {
    if (l.element.descriptor() != d)
      throw DescriptorMismatch("reduce: letter element is not over the word's group");
    if (l.index < 1) throw DomainError("letter index must be >= 1");
    if (l.element.is_identity()) continue;
    if (!stack.empty() && stack.back().same_factor(l)) {
      stack.back().element *= l.element;
      if (stack.back().element.is_identity()) stack.pop_back();
    } else {
      stack.push_back(std::move(l));
    }
  }
  return w;
}

inline SigmaWord concat(const SigmaWord& u, const SigmaWord& v) {
  if (u.descriptor() != v.descriptor())
    throw DescriptorMismatch("concat: words over different groups");
  std::vector<Letter> raw;
  raw.reserve(u.size() + v.size());
  raw.insert(raw.end(), u.begin(), u.end());
  raw.insert(raw.end(), v.begin(), v.end());
  return reduce(std::move(raw), u.descriptor());
}

inline SigmaWord invert_word(const SigmaWord& w) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    raw.push_back(it->inverse());
  return reduce(std::move(raw), w.descriptor());
}

/// Largest letter index, 0 for the empty word.
inline std::int64_t max_index(const SigmaWord& w) noexcept {
  std::int64_t m = 0;
  for (const auto& l : w) m = std::max(m, l.index);
  return m;
}

/// Quotient by the factors with index > horizon: delete those letters and
/// reduce, which may merge the neighbours of a deleted letter.
inline SigmaWord project_horizon(const SigmaWord& w, std::int64_t horizon) {
  if (horizon < 1) throw DomainError("horizon must be >= 1");
  std::vector<Letter> raw;
  for (const auto& l : w)
    if (l.index <= horizon) raw.push_back(l);
  return reduce(std::move(raw), w.descriptor());
}

/// A homomorphism of free products computed letter by letter: each letter
/// is replaced by its image word, images are concatenated in word order,
/// and the result is reduced.
class StandardHom {
 public:
  using LetterMap = std::function<SigmaWord(const Letter&)>;

  StandardHom(std::string name, LetterMap map)
      : name_(std::move(name)), map_(std::move(map)) {}

  /// Homomorphism that moves each factor (source, n) onto the factor
  /// (target, index_map(n)) and leaves the group element untouched.
  static StandardHom relabeling(std::string name, Family source, Family target,
                                std::function<std::int64_t(std::int64_t)> index_map) {
    return StandardHom(std::move(name), [=](const Letter& l) {
      if (l.family != source)
        throw DomainError(std::string("letter family ") + family_char(l.family) +
                          " outside the domain family " + family_char(source));
      return reduce({Letter{target, index_map(l.index), l.element}},
                    l.element.descriptor());
    });
  }

  static StandardHom identity() {
    return StandardHom("id", [](const Letter& l) {
      return reduce({l}, l.element.descriptor());
    });
  }

  const std::string& name() const noexcept { return name_; }

  SigmaWord image(const Letter& l) const { return map_(l); }

 private:
  std::string name_;
  LetterMap map_;
};

inline SigmaWord apply_hom(const StandardHom& h, const SigmaWord& w) {
  std::vector<Letter> raw;
  for (const auto& l : w) {
    SigmaWord img = h.image(l);
    if (img.descriptor() != w.descriptor())
      throw DescriptorMismatch("apply_hom: image of " + h.name() + " over a different group");
    raw.insert(raw.end(), img.begin(), img.end());
  }
  return reduce(std::move(raw), w.descriptor());
}

/// Random reduced word over family C with `length` letters and indices in
/// [1, max_index]. Consecutive letters use distinct indices, so the raw
/// sequence is already reduced; with max_index == 1 at most one letter fits.
template <class Rng>
SigmaWord random_word(const GroupDescriptor& d, std::int64_t max_index, std::size_t length,
                      Rng& rng) {
  if (max_index < 1) throw DomainError("random_word: max_index must be >= 1");
  if (d.kind() == GroupKind::trivial) return SigmaWord(d);
  std::uniform_int_distribution<std::int64_t> idx(1, max_index);
  std::vector<Letter> raw;
  std::int64_t prev = 0;
  for (std::size_t i = 0; i < length; ++i) {
    std::int64_t n = idx(rng);
    if (n == prev) {
      if (max_index == 1) break;
      while (n == prev) n = idx(rng);
    }
    raw.push_back({Family::C, n, random_nonidentity(d, rng)});
    prev = n;
  }
  return reduce(std::move(raw), d);
}

inline SigmaWord random_word(const GroupDescriptor& d, std::int64_t max_index,
                             std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_word(d, max_index, length, rng);
}

}  // namespace snakecone
