#pragma once

// Exact integer matrices and Smith normal form with transforms.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "snakecone/error.hpp"

namespace snakecone {

// Expression templates off: results are plain values, so members like is_zero()
// work on every intermediate.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DomainError("ragged matrix literal");
      for (long long x : row) data_.emplace_back(x);
    }
  }

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += q * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& q, std::size_t from = 0) {
    for (std::size_t j = from; j < cols_; ++j)
      if (!(*this)(src, j).is_zero()) (*this)(dst, j) += q * (*this)(src, j);
  }
  /// col[dst] += q * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& q, std::size_t from = 0) {
    for (std::size_t i = from; i < rows_; ++i)
      if (!(*this)(i, src).is_zero()) (*this)(i, dst) += q * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
  }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: dimension mismatch");
    IntegerMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(IntegerMatrix m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

struct SNFResult {
  IntegerMatrix U, D, V;  // U * A * V == D

  /// Diagonal entries d1 | d2 | ... (zeros last).
  std::vector<Integer> invariant_factors() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
    return out;
  }
};

/// Smith normal form over the integers with unimodular transforms.
inline SNFResult smith_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SNFResult r{IntegerMatrix::identity(m), a, IntegerMatrix::identity(n)};
  auto& D = r.D;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Pivot on the smallest nonzero magnitude in the trailing block.
      std::size_t pi = m, pj = n;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (!D(i, j).is_zero() && (pi == m || abs(D(i, j)) < best)) {
            best = abs(D(i, j));
            pi = i;
            pj = j;
          }
      if (pi == m) return r;  // trailing block is zero
      D.swap_rows(t, pi);
      r.U.swap_rows(t, pi);
      D.swap_cols(t, pj);
      r.V.swap_cols(t, pj);

      bool clean = true;
      const Integer pivot = D(t, t);
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t).is_zero()) continue;
        Integer q = D(i, t) / pivot;
        if (!q.is_zero()) {
          D.add_row(i, t, -q, t);
          r.U.add_row(i, t, -q);
        }
        if (!D(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j).is_zero()) continue;
        Integer q = D(t, j) / pivot;
        if (!q.is_zero()) {
          D.add_col(j, t, -q, t);
          r.V.add_col(j, t, -q);
        }
        if (!D(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;

      // Row and column are clear; the pivot must also divide the block.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!(D(i, j) % pivot).is_zero()) {
            D.add_row(t, i, 1, t);
            r.U.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      r.U.negate_row(t);
    }
  }
  return r;
}

/// Checks U * A * V == D, |det U| == |det V| == 1, D diagonal with
/// nonnegative entries forming a divisibility chain.
struct SNFContract {
  bool product_matches = false;
  bool u_unimodular = false;
  bool v_unimodular = false;
  bool diagonal_chain = false;

  bool ok() const noexcept {
    return product_matches && u_unimodular && v_unimodular && diagonal_chain;
  }
};

inline SNFContract check_snf(const IntegerMatrix& a, const SNFResult& r) {
  SNFContract c;
  c.product_matches = r.U.rows() == a.rows() && r.V.cols() == a.cols() &&
                      r.U * a * r.V == r.D;
  c.u_unimodular = abs(determinant(r.U)) == 1;
  c.v_unimodular = abs(determinant(r.V)) == 1;
  bool chain = r.D.is_diagonal();
  auto f = r.invariant_factors();
  for (std::size_t i = 0; i < f.size() && chain; ++i) {
    if (f[i] < 0) chain = false;
    if (i + 1 < f.size()) {
      // d_i | d_{i+1}; zero divides only zero.
      if (f[i].is_zero())
        chain = chain && f[i + 1].is_zero();
      else
        chain = chain && (f[i + 1] % f[i]).is_zero();
    }
  }
  c.diagonal_chain = chain;
  return c;
}

}  // namespace snakecone
