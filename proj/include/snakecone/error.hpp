#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace snakecone {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two values built over different base groups were combined.
class DescriptorMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument was violated (bad length, non-abelian
/// descriptor, letter outside a homomorphism's domain, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An insertion plan or scenario parameter set fails an admissibility bound.
class InadmissiblePlan : public Error {
 public:
  using Error::Error;
};

/// Integer arithmetic on a group coordinate left the int64 range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Text that does not match one of the grammars in text.hpp.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& expected,
             const std::string& found)
      : Error("parse error at byte " + std::to_string(offset) + ": expected " +
              expected + ", found " + (found.empty() ? "end of input" : "'" + found + "'")),
        offset_(offset),
        expected_(expected) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace snakecone
