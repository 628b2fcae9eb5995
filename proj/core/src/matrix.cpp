#include "herd/matrix.hpp"

#include <sstream>
#include <utility>

#include "herd/errors.hpp"

namespace herd {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw InvalidInputError("negative matrix dimension");
}

RationalMatrix::RationalMatrix(int rows, int cols, RationalVector entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw InvalidInputError("negative matrix dimension");
  if (entries_.size() != static_cast<size_t>(rows) * cols) {
    throw InvalidInputError("entry count does not match matrix shape");
  }
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<RationalVector> copied;
  copied.reserve(rows.size());
  for (const auto& r : rows) copied.emplace_back(r);
  return from_rows(copied);
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  const int nr = static_cast<int>(rows.size());
  const int nc = nr == 0 ? 0 : static_cast<int>(rows.front().size());
  RationalMatrix m(nr, nc);
  for (int i = 0; i < nr; ++i) {
    if (static_cast<int>(rows[i].size()) != nc) throw InvalidInputError("ragged rows");
    for (int j = 0; j < nc; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::column(const RationalVector& v) {
  RationalMatrix m(static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
  return m;
}

RationalMatrix RationalMatrix::diagonal(const RationalVector& d) {
  RationalMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

const Rational& RationalMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw InvalidInputError("matrix index out of range");
  return (*this)(r, c);
}

Rational& RationalMatrix::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw InvalidInputError("matrix index out of range");
  return (*this)(r, c);
}

RationalVector RationalMatrix::row(int r) const {
  RationalVector out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = (*this)(r, j);
  return out;
}

RationalVector RationalMatrix::col(int c) const {
  RationalVector out(rows_);
  for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

void RationalMatrix::set_col(int c, const RationalVector& v) {
  if (static_cast<int>(v.size()) != rows_) throw InvalidInputError("column length mismatch");
  for (int i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
}

RationalMatrix RationalMatrix::block(int r0, int c0, int nrows, int ncols) const {
  if (r0 < 0 || c0 < 0 || nrows < 0 || ncols < 0 || r0 + nrows > rows_ || c0 + ncols > cols_) {
    throw InvalidInputError("block out of range");
  }
  RationalMatrix out(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RationalMatrix::is_diagonal() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

std::string RationalMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << (*this)(i, j).str();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) os << "[[]]";
  return os.str();
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInputError("matrix product shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b(k, j).is_zero()) continue;
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInputError("matrix sum shape mismatch");
  RationalMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInputError("matrix difference shape mismatch");
  RationalMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = s * m(i, j);
  return out;
}

RationalVector operator*(const RationalMatrix& m, const RationalVector& v) {
  if (m.cols() != static_cast<int>(v.size())) throw InvalidInputError("matrix-vector shape mismatch");
  RationalVector out(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    Rational acc;
    for (int j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero() && !v[j].is_zero()) acc += m(i, j) * v[j];
    }
    out[i] = acc;
  }
  return out;
}

RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw InvalidInputError("hstack row mismatch");
  RationalMatrix out(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

int rank(const RationalMatrix& m) {
  const int nr = m.rows();
  const int nc = m.cols();
  if (nr == 0 || nc == 0) return 0;

  // Clear denominators per row; row scaling by a positive integer keeps rank.
  std::vector<std::vector<Integer>> w(nr, std::vector<Integer>(nc));
  for (int i = 0; i < nr; ++i) {
    Integer l = 1;
    for (int j = 0; j < nc; ++j) {
      Integer g;
      mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), m(i, j).denominator().get_mpz_t());
      l = g;
    }
    for (int j = 0; j < nc; ++j) {
      w[i][j] = m(i, j).numerator() * (l / m(i, j).denominator());
    }
  }

  // Bareiss fraction-free elimination with row/column pivot search.
  Integer prev = 1;
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int pivot = -1;
    for (int i = r; i < nr; ++i) {
      if (sgn(w[i][c]) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(w[r], w[pivot]);
    for (int i = r + 1; i < nr; ++i) {
      for (int j = c + 1; j < nc; ++j) {
        Integer t = w[r][c] * w[i][j] - w[i][c] * w[r][j];
        mpz_divexact(w[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      w[i][c] = 0;
    }
    prev = w[r][c];
    ++r;
  }
  return r;
}

namespace {

// Gauss-Jordan on [a | rhs]; returns false when a is singular.
bool eliminate(RationalMatrix& t, int n) {
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i) {
      if (!t(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return false;
    if (pivot != c) {
      for (int j = 0; j < t.cols(); ++j) std::swap(t(pivot, j), t(c, j));
    }
    const Rational inv = t(c, c).reciprocal();
    for (int j = 0; j < t.cols(); ++j) t(c, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || t(i, c).is_zero()) continue;
      const Rational f = t(i, c);
      for (int j = 0; j < t.cols(); ++j) t(i, j) -= f * t(c, j);
    }
  }
  return true;
}

}  // namespace

RationalVector solve_linear(const RationalMatrix& a, const RationalVector& b) {
  if (!a.is_square() || a.rows() != static_cast<int>(b.size())) {
    throw InvalidInputError("solve_linear shape mismatch");
  }
  const int n = a.rows();
  RationalMatrix t = hstack(a, RationalMatrix::column(b));
  if (!eliminate(t, n)) throw InvalidInputError("singular system");
  return t.col(n);
}

RationalMatrix inverse(const RationalMatrix& a) {
  if (!a.is_square()) throw InvalidInputError("inverse of non-square matrix");
  const int n = a.rows();
  RationalMatrix t = hstack(a, RationalMatrix::identity(n));
  if (!eliminate(t, n)) throw InvalidInputError("singular matrix");
  return t.block(0, n, n, n);
}

std::string vector_str(const RationalVector& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].str();
  os << ")";
  return os.str();
}

}  // namespace herd
