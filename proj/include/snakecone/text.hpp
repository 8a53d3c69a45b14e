#pragma once

// Text forms used on the command line and in reports.
//
//   descriptor  free:2 | abelian:3 | cyclic:6 | finabelian:2,4 | trivial
//   element     free:        a^2 b^-1 c       (or g1 g2 ... for any rank)
//               abelian kinds: (1,-2)          cyclic also as a bare residue
//   word        e | letter (ws letter)*
//   letter      ('C'|'A'|'B') index '[' element ']' ('^-1')?
//   sequence    '(' coords ')' (';' '(' coords ')')*
//   matrix      rows of space-separated decimal integers, one row per line

#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "snakecone/abelian_homology.hpp"
#include "snakecone/error.hpp"
#include "snakecone/group.hpp"
#include "snakecone/sigma_word.hpp"
#include "snakecone/smith.hpp"

namespace snakecone {

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  std::size_t offset() const noexcept { return base_ + pos_; }
  bool done() const noexcept { return pos_ >= text_.size(); }
  char peek() const noexcept { return done() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool accept(std::string_view s) {
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }

  std::int64_t integer(bool allow_sign = true) {
    std::size_t start = pos_;
    if (allow_sign && (peek() == '-' || peek() == '+')) ++pos_;
    std::size_t digits = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("integer");
    }
    std::string_view tok = text_.substr(start, pos_ - start);
    if (tok.front() == '+') tok.remove_prefix(1);
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      pos_ = start;
      fail("integer within int64 range");
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::size_t end = pos_;
    while (end < text_.size() && end - pos_ < 12 &&
           !std::isspace(static_cast<unsigned char>(text_[end])))
      ++end;
    throw ParseError(offset(), expected, std::string(text_.substr(pos_, end - pos_)));
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

inline std::vector<std::int64_t> parse_coords(Cursor& c) {
  std::vector<std::int64_t> out;
  c.expect('(');
  c.skip_ws();
  if (c.accept(')')) return out;
  for (;;) {
    c.skip_ws();
    out.push_back(c.integer());
    c.skip_ws();
    if (c.accept(')')) return out;
    if (!c.accept(',')) c.fail("',' or ')'");
  }
}

inline std::string coords_string(const std::vector<std::int64_t>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + ")";
}

inline GroupElement parse_free_element(Cursor& c, const GroupDescriptor& d, char terminator) {
  std::vector<std::int64_t> letters;
  const auto rank = static_cast<std::int64_t>(d.rank());
  for (;;) {
    c.skip_ws();
    if (c.done() || c.peek() == terminator) break;
    const std::size_t at = c.offset();
    std::int64_t gen = 0;
    char ch = c.peek();
    if (ch == 'g' && rank > 0) {
      c.accept('g');
      if (std::isdigit(static_cast<unsigned char>(c.peek())))
        gen = c.integer(false);
      else
        gen = 'g' - 'a' + 1;  // the letter g itself
    } else if (ch >= 'a' && ch <= 'z') {
      c.accept(ch);
      gen = ch - 'a' + 1;
    } else {
      c.fail("generator name");
    }
    if (gen < 1 || gen > rank)
      throw ParseError(at, "generator of free:" + std::to_string(rank),
                       "generator #" + std::to_string(gen));
    std::int64_t exp = 1;
    if (c.accept('^')) exp = c.integer();
    if (exp > 1'000'000 || exp < -1'000'000) c.fail("exponent of magnitude <= 10^6");
    for (std::int64_t k = 0; k < (exp < 0 ? -exp : exp); ++k)
      letters.push_back(exp < 0 ? -gen : gen);
  }
  return GroupElement(d, std::move(letters));
}

/// Element text inside a letter's brackets (terminator ']') or standalone.
inline GroupElement parse_element(Cursor& c, const GroupDescriptor& d, char terminator) {
  c.skip_ws();
  switch (d.kind()) {
    case GroupKind::free: return parse_free_element(c, d, terminator);
    case GroupKind::trivial:
      if (c.peek() == '(') {
        const std::size_t at = c.offset();
        if (!parse_coords(c).empty()) throw ParseError(at, "'()' for the trivial group", "coordinates");
      }
      return GroupElement(d, {});
    case GroupKind::cyclic:
      if (c.peek() != '(') return GroupElement(d, {c.integer()});
      [[fallthrough]];
    default: {
      const std::size_t at = c.offset();
      auto p = parse_coords(c);
      if (p.size() != d.rank())
        throw ParseError(at, std::to_string(d.rank()) + " coordinates",
                         std::to_string(p.size()) + " coordinates");
      return GroupElement(d, std::move(p));
    }
  }
}

}  // namespace detail

inline GroupDescriptor parse_descriptor(std::string_view text) {
  detail::Cursor c(text);
  c.skip_ws();
  GroupDescriptor d;
  auto guarded = [&](auto make) {
    const std::size_t at = c.offset();
    try {
      return make();
    } catch (const DomainError& e) {
      throw ParseError(at, "valid group parameters", e.what());
    }
  };
  if (c.accept("trivial")) {
    d = GroupDescriptor::trivial();
  } else if (c.accept("free:")) {
    d = guarded([&] { return GroupDescriptor::free(c.integer(false)); });
  } else if (c.accept("abelian:")) {
    d = guarded([&] { return GroupDescriptor::free_abelian(c.integer(false)); });
  } else if (c.accept("cyclic:")) {
    d = guarded([&] { return GroupDescriptor::cyclic(c.integer(false)); });
  } else if (c.accept("finabelian:")) {
    d = guarded([&] {
      std::vector<std::int64_t> f{c.integer(false)};
      while (c.accept(',')) f.push_back(c.integer(false));
      return GroupDescriptor::finite_abelian(std::move(f));
    });
  } else {
    c.fail("one of trivial, free:<r>, abelian:<r>, cyclic:<k>, finabelian:<d1,...>");
  }
  c.skip_ws();
  if (!c.done()) c.fail("end of group descriptor");
  return d;
}

inline std::string to_string(const GroupDescriptor& d) {
  switch (d.kind()) {
    case GroupKind::trivial: return "trivial";
    case GroupKind::free: return "free:" + std::to_string(d.rank());
    case GroupKind::free_abelian: return "abelian:" + std::to_string(d.rank());
    case GroupKind::cyclic: return "cyclic:" + std::to_string(d.modulus(0));
    case GroupKind::finite_abelian: {
      std::string s = "finabelian:";
      for (std::size_t i = 0; i < d.rank(); ++i) {
        if (i) s += ',';
        s += std::to_string(d.modulus(i));
      }
      return s;
    }
  }
  return {};
}

inline GroupElement parse_element(std::string_view text, const GroupDescriptor& d) {
  detail::Cursor c(text);
  GroupElement g = detail::parse_element(c, d, '\0');
  c.skip_ws();
  if (!c.done()) c.fail("end of element");
  return g;
}

/// Canonical element text: free words as syllables (a^2 b^-1), cyclic as a
/// bare residue, other abelian kinds as a coordinate tuple.
inline std::string to_string(const GroupElement& g) {
  const auto& d = g.descriptor();
  const auto& p = g.payload();
  switch (d.kind()) {
    case GroupKind::trivial: return "";
    case GroupKind::cyclic: return std::to_string(p[0]);
    case GroupKind::free: {
      auto name = [&](std::int64_t gen) {
        return d.rank() <= 26 ? std::string(1, static_cast<char>('a' + gen - 1))
                              : "g" + std::to_string(gen);
      };
      std::string s;
      for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        auto run = static_cast<std::int64_t>(j - i);
        if (!s.empty()) s += ' ';
        s += name(p[i] < 0 ? -p[i] : p[i]);
        if (p[i] < 0 || run > 1) s += "^" + std::to_string(p[i] < 0 ? -run : run);
        i = j;
      }
      return s;
    }
    default: return detail::coords_string(p);
  }
}

inline SigmaWord parse_word(std::string_view text, const GroupDescriptor& d) {
  detail::Cursor c(text);
  c.skip_ws();
  if (c.accept('e')) {
    c.skip_ws();
    if (!c.done()) c.fail("end of input after empty word 'e'");
    return SigmaWord(d);
  }
  std::vector<Letter> raw;
  while (!c.done()) {
    Letter l;
    switch (c.peek()) {
      case 'C': l.family = Family::C; break;
      case 'A': l.family = Family::A; break;
      case 'B': l.family = Family::B; break;
      default: c.fail("family tag C, A or B");
    }
    c.accept(c.peek());
    const std::size_t at = c.offset();
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("letter index");
    l.index = c.integer(false);
    if (l.index < 1) throw ParseError(at, "letter index >= 1", std::to_string(l.index));
    c.expect('[');
    l.element = detail::parse_element(c, d, ']');
    c.skip_ws();
    c.expect(']');
    if (c.accept('^')) {
      if (!c.accept("-1")) c.fail("'-1' after '^' on a letter");
      l.element = l.element.inverse();
    }
    raw.push_back(std::move(l));
    if (!c.done() && !std::isspace(static_cast<unsigned char>(c.peek())))
      c.fail("whitespace between letters");
    c.skip_ws();
  }
  if (raw.empty()) c.fail("a letter or 'e'");
  return reduce(std::move(raw), d);
}

inline std::string to_string(const Letter& l) {
  return family_char(l.family) + std::to_string(l.index) + "[" + to_string(l.element) + "]";
}

inline std::string to_string(const SigmaWord& w) {
  if (w.empty()) return "e";
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    s += to_string(l);
  }
  return s;
}

inline AbelianSequence parse_sequence(std::string_view text, const GroupDescriptor& d) {
  if (!d.is_abelian()) throw DomainError("sequences need an abelian coefficient group");
  detail::Cursor c(text);
  std::vector<GroupElement> entries;
  for (;;) {
    c.skip_ws();
    const std::size_t at = c.offset();
    auto p = detail::parse_coords(c);
    if (p.size() != d.rank())
      throw ParseError(at, std::to_string(d.rank()) + " coordinates",
                       std::to_string(p.size()) + " coordinates");
    entries.emplace_back(d, std::move(p));
    c.skip_ws();
    if (c.done()) break;
    if (!c.accept(';')) c.fail("';' between entries");
  }
  return AbelianSequence(d, std::move(entries));
}

inline std::string to_string(const AbelianSequence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.length(); ++i) {
    if (i) out += ';';
    out += detail::coords_string(s[i].payload());
  }
  return out;
}

/// Plain-text matrix: ASCII decimal integers separated by single or
/// repeated spaces, rows separated by '\n', optional trailing newline.
inline IntegerMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Integer>> rows;
  std::size_t pos = 0;
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.empty()) throw ParseError(0, "at least one matrix row", "");
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    std::vector<Integer> row;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ') {
        ++i;
        continue;
      }
      std::size_t start = i;
      if (line[i] == '-') ++i;
      std::size_t digits = i;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      if (i == digits || (i < line.size() && line[i] != ' '))
        throw ParseError(pos + start, "decimal integer",
                         std::string(line.substr(start, std::min<std::size_t>(12, line.size() - start))));
      row.emplace_back(std::string(line.substr(start, i - start)));
    }
    if (row.empty()) throw ParseError(pos, "a non-empty matrix row", "");
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(pos, std::to_string(rows.front().size()) + " entries in row",
                       std::to_string(row.size()) + " entries");
    rows.push_back(std::move(row));
    pos = eol + 1;
  }
  IntegerMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

inline std::string to_string(const IntegerMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace snakecone
