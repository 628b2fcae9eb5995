#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "herd/rational.hpp"

namespace herd {

/// Dense row-major matrix of exact rationals. Equality is entrywise exact.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);  // zero-filled
  RationalMatrix(int rows, int cols, RationalVector entries);

  static RationalMatrix identity(int n);
  static RationalMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  static RationalMatrix column(const RationalVector& v);
  static RationalMatrix diagonal(const RationalVector& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Rational& at(int r, int c) const;
  Rational& at(int r, int c);
  const Rational& operator()(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  Rational& operator()(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }

  RationalVector row(int r) const;
  RationalVector col(int c) const;
  void set_col(int c, const RationalVector& v);

  /// Submatrix of size nrows x ncols with top-left corner (r0, c0).
  RationalMatrix block(int r0, int c0, int nrows, int ncols) const;
  RationalMatrix transpose() const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_diagonal() const;

  std::string str() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  RationalVector entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& m);
RationalVector operator*(const RationalMatrix& m, const RationalVector& v);

/// [a | b], requires matching row counts.
RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);

/// Exact rank via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
int rank(const RationalMatrix& m);

/// Solves a x = b for square nonsingular a by exact Gaussian elimination.
/// Throws InvalidInputError when a is singular or shapes mismatch.
RationalVector solve_linear(const RationalMatrix& a, const RationalVector& b);

/// Inverse of a square nonsingular matrix; throws when singular.
RationalMatrix inverse(const RationalMatrix& a);

std::string vector_str(const RationalVector& v);

}  // namespace herd
