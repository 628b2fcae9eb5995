#include "herd/positivity.hpp"

#include <string>

#include "herd/errors.hpp"

namespace herd {

HerdabilityVerdict HerdabilityVerdict::yes(RationalVector primal, std::string method) {
  HerdabilityVerdict v;
  v.herdable = true;
  v.primal_certificate = std::move(primal);
  v.method = std::move(method);
  return v;
}

HerdabilityVerdict HerdabilityVerdict::no(RationalVector dual, std::string method) {
  HerdabilityVerdict v;
  v.herdable = false;
  v.dual_certificate = std::move(dual);
  v.method = std::move(method);
  return v;
}

namespace {

// Phase-1 tableau for  min 1's  s.t.  M(u+ - u-) - w + s = 1,  all vars >= 0.
// The s-columns form the starting basis (basic value 1 each), so no
// artificial variables are needed and the phase-1 optimum decides
// feasibility of {u : M u >= 1} directly.
class PositiveImageSimplex {
public:
  explicit PositiveImageSimplex(const RationalMatrix& m)
      : m_(m), n_(m.rows()), q_(m.cols()), ncols_(2 * q_ + 2 * n_) {
    tableau_.assign(n_ + 1, RationalVector(ncols_ + 1));
    basis_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < q_; ++j) {
        tableau_[i][j] = m_(i, j);
        tableau_[i][q_ + j] = -m_(i, j);
      }
      tableau_[i][2 * q_ + i] = -1;       // surplus w_i
      tableau_[i][2 * q_ + n_ + i] = 1;   // infeasibility s_i (basic)
      tableau_[i][ncols_] = 1;            // rhs
      basis_[i] = 2 * q_ + n_ + i;
    }
    // Reduced-cost row for cost 1 on each s, already priced out over the
    // starting basis.
    for (int j = 0; j <= ncols_; ++j) {
      Rational c = (j >= 2 * q_ + n_ && j < ncols_) ? Rational(1) : Rational(0);
      for (int i = 0; i < n_; ++i) c -= tableau_[i][j];
      tableau_[n_][j] = c;
    }
  }

  HerdabilityVerdict solve() {
    // Bland's rule: lowest-index entering and, on ratio ties, lowest basic
    // variable leaving. Guarantees termination.
    while (true) {
      int entering = -1;
      for (int j = 0; j < ncols_; ++j) {
        if (tableau_[n_][j].sign() < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) break;

      int leaving = -1;
      Rational best_ratio;
      for (int i = 0; i < n_; ++i) {
        if (tableau_[i][entering].sign() <= 0) continue;
        Rational ratio = tableau_[i][ncols_] / tableau_[i][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          best_ratio = ratio;
          leaving = i;
        }
      }
      if (leaving < 0) {
        // The phase-1 objective is bounded below by zero.
        throw InternalError("unbounded phase-1 simplex");
      }
      pivot(leaving, entering);
    }

    const Rational objective = -tableau_[n_][ncols_];
    if (objective.is_zero()) {
      RationalVector u(q_);
      for (int i = 0; i < n_; ++i) {
        if (basis_[i] < q_) {
          u[basis_[i]] += tableau_[i][ncols_];
        } else if (basis_[i] < 2 * q_) {
          u[basis_[i] - q_] -= tableau_[i][ncols_];
        }
      }
      return HerdabilityVerdict::yes(std::move(u), "direct-feasibility");
    }

    // Dual values off the s-column reduced costs: y_i = 1 - rc(s_i).
    RationalVector y(n_);
    for (int i = 0; i < n_; ++i) y[i] = Rational(1) - tableau_[n_][2 * q_ + n_ + i];
    return HerdabilityVerdict::no(std::move(y), "direct-feasibility");
  }

private:
  void pivot(int row, int col) {
    const Rational inv = tableau_[row][col].reciprocal();
    for (int j = 0; j <= ncols_; ++j) tableau_[row][j] *= inv;
    for (int i = 0; i <= n_; ++i) {
      if (i == row || tableau_[i][col].is_zero()) continue;
      const Rational f = tableau_[i][col];
      for (int j = 0; j <= ncols_; ++j) tableau_[i][j] -= f * tableau_[row][j];
    }
    basis_[row] = col;
  }

  const RationalMatrix& m_;
  int n_;
  int q_;
  int ncols_;
  std::vector<RationalVector> tableau_;
  std::vector<int> basis_;
};

}  // namespace

HerdabilityVerdict strictly_positive_in_image(const RationalMatrix& m) {
  if (m.rows() == 0) throw InvalidInputError("strictly_positive_in_image: matrix has no rows");
  return PositiveImageSimplex(m).solve();
}

bool is_unisigned(const RationalVector& v) {
  int seen = 0;
  for (const auto& x : v) {
    const int s = x.sign();
    if (s == 0) continue;
    if (seen == 0) {
      seen = s;
    } else if (seen != s) {
      return false;
    }
  }
  return seen != 0;
}

std::optional<RationalVector> unisigned_cover_check(const RationalMatrix& m) {
  if (m.rows() == 0) return std::nullopt;
  RationalVector coeffs(m.cols());
  std::vector<bool> covered(m.rows(), false);
  for (int j = 0; j < m.cols(); ++j) {
    const RationalVector column = m.col(j);
    if (!is_unisigned(column)) continue;
    int s = 0;
    for (int i = 0; i < m.rows(); ++i) {
      if (column[i].sign() != 0) {
        s = column[i].sign();
        covered[i] = true;
      }
    }
    coeffs[j] = Rational(s);
  }
  for (bool c : covered) {
    if (!c) return std::nullopt;
  }
  return coeffs;
}

std::optional<RationalVector> block_triangular_positive(const RationalMatrix& m,
                                                        const std::vector<IndexRange>& row_partition,
                                                        const std::vector<IndexRange>& col_partition) {
  const int k = static_cast<int>(row_partition.size());
  if (k == 0 || static_cast<int>(col_partition.size()) != k) {
    throw InvalidInputError("block partitions must be nonempty and of equal length");
  }
  const auto tiles = [](const std::vector<IndexRange>& p, int extent) {
    int pos = 0;
    for (const auto& r : p) {
      if (r.begin != pos || r.size() <= 0) return false;
      pos = r.end;
    }
    return pos == extent;
  };
  if (!tiles(row_partition, m.rows()) || !tiles(col_partition, m.cols())) {
    throw InvalidInputError("partitions do not tile the matrix");
  }
  for (int bi = 0; bi < k; ++bi) {
    for (int bj = 0; bj < bi; ++bj) {
      if (!m.block(row_partition[bi].begin, col_partition[bj].begin,
                   row_partition[bi].size(), col_partition[bj].size())
               .is_zero()) {
        throw InvalidInputError("below-diagonal block is nonzero");
      }
    }
  }

  // Bottom-up: pick u_i with the diagonal block's image >= 1, then scale it
  // so the already-fixed later blocks cannot pull any row of this block
  // group below 1.
  RationalVector u(m.cols());
  for (int bi = k - 1; bi >= 0; --bi) {
    const auto& rr = row_partition[bi];
    const auto& cc = col_partition[bi];
    const RationalMatrix diag_block = m.block(rr.begin, cc.begin, rr.size(), cc.size());
    HerdabilityVerdict v = strictly_positive_in_image(diag_block);
    if (!v.herdable) return std::nullopt;
    const RationalVector& ui = *v.primal_certificate;

    Rational carry_min;
    bool first = true;
    for (int i = rr.begin; i < rr.end; ++i) {
      Rational carry;
      for (int j = cc.end; j < m.cols(); ++j) {
        if (!m(i, j).is_zero() && !u[j].is_zero()) carry += m(i, j) * u[j];
      }
      if (first || carry < carry_min) {
        carry_min = carry;
        first = false;
      }
    }
    const Rational scale = max(Rational(1), Rational(1) - carry_min);
    for (int j = 0; j < cc.size(); ++j) u[cc.begin + j] = scale * ui[j];
  }
  return u;
}

bool verify_primal_certificate(const RationalMatrix& m, const RationalVector& u) {
  if (static_cast<int>(u.size()) != m.cols()) return false;
  const RationalVector image = m * u;
  for (const auto& x : image) {
    if (x < Rational(1)) return false;
  }
  return true;
}

bool verify_dual_certificate(const RationalMatrix& m, const RationalVector& y) {
  if (static_cast<int>(y.size()) != m.rows()) return false;
  bool nonzero = false;
  for (const auto& x : y) {
    if (x.sign() < 0) return false;
    if (x.sign() > 0) nonzero = true;
  }
  if (!nonzero) return false;
  for (int j = 0; j < m.cols(); ++j) {
    Rational acc;
    for (int i = 0; i < m.rows(); ++i) {
      if (!y[i].is_zero() && !m(i, j).is_zero()) acc += y[i] * m(i, j);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace herd
