#pragma once

// Small dense exact linear algebra over Q.

#include <hyperoct/errors.hpp>
#include <hyperoct/rational.hpp>

#include <gmp.h>

#include <utility>
#include <vector>

namespace hyperoct {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    }
    return t;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw InvalidArgument("matrix-vector size mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (!is_zero(at(r, c)) && !is_zero(v[c])) out[r] += at(r, c) * v[c];
      }
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Pivot columns of the row echelon form, by fraction-free (Bareiss)
/// elimination after clearing denominators row by row.
inline std::vector<std::size_t> pivot_columns(const RationalMatrix& A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  std::vector<std::vector<BigInt>> M(m, std::vector<BigInt>(n));
  for (std::size_t r = 0; r < m; ++r) {
    BigInt L = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), A.at(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) M[r][c] = A.at(r, c).get_num() * (L / A.at(r, c).get_den());
  }
  std::vector<std::size_t> pivots;
  BigInt prev = 1;
  std::size_t row = 0;
  BigInt t;
  for (std::size_t c = 0; c < n && row < m; ++c) {
    std::size_t p = row;
    while (p < m && sgn(M[p][c]) == 0) ++p;
    if (p == m) continue;
    std::swap(M[p], M[row]);
    for (std::size_t i = row + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        t = M[row][c] * M[i][j] - M[i][c] * M[row][j];
        mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      M[i][c] = 0;
    }
    prev = M[row][c];
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(const RationalMatrix& A) { return pivot_columns(A).size(); }

/// Inverse of a square matrix by Gauss-Jordan over Q.
inline RationalMatrix invert(const RationalMatrix& A) {
  const std::size_t k = A.rows();
  if (A.cols() != k) throw InvalidArgument("invert: matrix is not square");
  RationalMatrix W = A;
  RationalMatrix inv(k, k);
  for (std::size_t i = 0; i < k; ++i) inv.at(i, i) = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && is_zero(W.at(p, c))) ++p;
    if (p == k) throw AssertionFailure("invert: singular matrix");
    if (p != c) {
      for (std::size_t j = 0; j < k; ++j) {
        std::swap(W.at(p, j), W.at(c, j));
        std::swap(inv.at(p, j), inv.at(c, j));
      }
    }
    const Rational pivot = W.at(c, c);
    for (std::size_t j = 0; j < k; ++j) {
      W.at(c, j) /= pivot;
      inv.at(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c || is_zero(W.at(i, c))) continue;
      const Rational f = W.at(i, c);
      for (std::size_t j = 0; j < k; ++j) {
        if (!is_zero(W.at(c, j))) W.at(i, j) -= f * W.at(c, j);
        if (!is_zero(inv.at(c, j))) inv.at(i, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

}  // namespace hyperoct
