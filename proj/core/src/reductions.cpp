#include "herd/reductions.hpp"

#include <algorithm>
#include <map>

#include "herd/errors.hpp"

namespace herd {

RationalMatrix permutation_matrix(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  RationalMatrix p(n, n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (perm[i] < 0 || perm[i] >= n || seen[perm[i]]) {
      throw InvalidInputError("row permutation is not a permutation of 0..n-1");
    }
    seen[perm[i]] = true;
    p(i, perm[i]) = Rational(1);
  }
  return p;
}

namespace {

std::vector<int> nonzero_row_indices(const RationalMatrix& b) {
  std::vector<int> rows;
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      if (!b(i, j).is_zero()) {
        rows.push_back(i);
        break;
      }
    }
  }
  return rows;
}

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(RationalMatrix& t) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < t.cols() && row < t.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < t.rows(); ++i) {
      if (!t(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int j = 0; j < t.cols(); ++j) std::swap(t(row, j), t(pivot, j));
    const Rational inv = t(row, col).reciprocal();
    for (int j = col; j < t.cols(); ++j) t(row, j) = t(row, j) * inv;
    for (int i = 0; i < t.rows(); ++i) {
      if (i == row || t(i, col).is_zero()) continue;
      const Rational f = t(i, col);
      for (int j = col; j < t.cols(); ++j) t(i, j) = t(i, j) - f * t(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

NormalizedPair normalize_input(const SystemPair& pair) {
  const RationalMatrix& b = pair.B;
  const int n = b.rows();
  const int m = b.cols();
  const std::vector<int> leader_rows = nonzero_row_indices(b);
  const int r = static_cast<int>(leader_rows.size());
  if (r == 0 && n > 0) throw NotNormalizableError("B has no nonzero row");

  RationalMatrix b1(r, m);
  for (int p = 0; p < r; ++p) {
    for (int j = 0; j < m; ++j) b1(p, j) = b(leader_rows[p], j);
  }
  RationalMatrix echelon = b1;
  const std::vector<int> pivot_cols = rref(echelon);
  if (static_cast<int>(pivot_cols.size()) < r) {
    throw NotNormalizableError("nonzero rows of B are linearly dependent");
  }

  // T = [X | K]: B1 X = I_r through the inverse of the pivot-column block,
  // B1 K = 0 through the echelon kernel basis, jointly nonsingular.
  RationalMatrix pivot_block(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) pivot_block(i, j) = b1(i, pivot_cols[j]);
  }
  const RationalMatrix pivot_inverse = r > 0 ? inverse(pivot_block) : RationalMatrix(0, 0);
  RationalMatrix t(m, m);
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < r; ++i) t(pivot_cols[i], j) = pivot_inverse(i, j);
  }
  int free_col = r;
  std::vector<bool> is_pivot(m, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  for (int c = 0; c < m; ++c) {
    if (is_pivot[c]) continue;
    t(c, free_col) = Rational(1);
    for (int i = 0; i < r; ++i) t(pivot_cols[i], free_col) = -echelon(i, c);
    ++free_col;
  }

  std::vector<int> perm = leader_rows;
  perm.reserve(n);
  std::vector<bool> is_leader(n, false);
  for (int v : leader_rows) is_leader[v] = true;
  for (int v = 0; v < n; ++v) {
    if (!is_leader[v]) perm.push_back(v);
  }

  const RationalMatrix bt = b * t;
  RationalMatrix a_out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a_out(i, j) = pair.A(perm[i], perm[j]);
  }
  RationalMatrix b_out(n, r);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < r; ++j) b_out(i, j) = bt(perm[i], j);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < r; ++j) {
      if (b_out(i, j) != Rational(i == j ? 1 : 0)) {
        throw InternalError("normalized input matrix is not in selection form");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = r; j < m; ++j) {
      if (!bt(perm[i], j).is_zero()) {
        throw InternalError("normalized input matrix has a nonzero dropped column");
      }
    }
  }

  return NormalizedPair{SystemPair(std::move(a_out), std::move(b_out)), t, std::move(perm)};
}

SystemPair leader_block_reduction(const SystemPair& pair) {
  const RationalMatrix& b = pair.B;
  const int n = b.rows();
  int r = 0;
  while (r < n) {
    bool nonzero = false;
    for (int j = 0; j < b.cols(); ++j) {
      if (!b(r, j).is_zero()) {
        nonzero = true;
        break;
      }
    }
    if (!nonzero) break;
    ++r;
  }
  for (int i = r; i < n; ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      if (!b(i, j).is_zero()) {
        throw InvalidInputError("B is not in block form [B1; 0]");
      }
    }
  }
  if (r > 0) {
    const RationalMatrix top = b.block(0, 0, r, b.cols());
    if (rank(top) < r) throw InvalidInputError("top block of B is not of full row rank");
  } else if (n > 0) {
    throw InvalidInputError("B is zero; block reduction needs at least one leader row");
  }

  RationalMatrix a22 = pair.A.block(r, r, n - r, n - r);
  RationalMatrix a21 = pair.A.block(r, 0, n - r, r);
  return SystemPair(std::move(a22), std::move(a21));
}

SystemPair replay_reductions(const ReductionTrace& trace, const SystemPair& original) {
  SystemPair current = original;
  for (const ReductionStep& step : trace.steps) {
    if (step.input_shape != std::make_pair(current.state_dim(), current.input_dim())) {
      throw InvalidInputError("reduction step shape does not match the current pair");
    }
    if (step.name == "normalize-input") {
      if (!step.input_transform || !step.row_permutation) {
        throw InvalidInputError("normalize-input step lacks transform data");
      }
      const RationalMatrix p = permutation_matrix(*step.row_permutation);
      const RationalMatrix a = p * current.A * p.transpose();
      const RationalMatrix bt = p * (current.B * *step.input_transform);
      current = SystemPair(a, bt.block(0, 0, bt.rows(), step.output_shape.second));
    } else if (step.name == "leader-block") {
      if (!step.block_split) throw InvalidInputError("leader-block step lacks the split index");
      const int r = *step.block_split;
      current = SystemPair(current.A.block(r, r, current.state_dim() - r, current.state_dim() - r),
                           current.A.block(r, 0, current.state_dim() - r, r));
    } else {
      throw InvalidInputError("unknown reduction step: " + step.name);
    }
    if (step.output_shape != std::make_pair(current.state_dim(), current.input_dim())) {
      throw InvalidInputError("reduction step output shape mismatch");
    }
  }
  return current;
}

HerdabilityVerdict diagonal_pair_herdability(const RationalMatrix& lambda,
                                             const RationalVector& gamma) {
  if (!lambda.is_square() || !lambda.is_diagonal()) {
    throw InvalidInputError("state matrix must be diagonal");
  }
  const int n = lambda.rows();
  if (static_cast<int>(gamma.size()) != n) {
    throw InvalidInputError("input vector length must match the state dimension");
  }
  for (const Rational& g : gamma) {
    if (g.is_zero()) throw InvalidInputError("input vector must have no zero entry");
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (lambda(i, i) != lambda(j, j)) continue;
      if ((gamma[i] * gamma[j]).sign() > 0) continue;
      RationalVector w(n, Rational(0));
      w[i] = gamma[j];
      w[j] = -gamma[i];
      if (w[i].sign() < 0) {
        for (Rational& e : w) e = -e;
      }
      return HerdabilityVerdict::no(std::move(w), "diagonal-pair");
    }
  }

  // Group equal eigenvalues; a polynomial matching one target value per
  // distinct eigenvalue makes every image entry at least one.
  std::map<Rational, Rational> target;
  for (int i = 0; i < n; ++i) {
    const Rational claim = Rational(gamma[i].sign()) * gamma[i].abs().reciprocal();
    auto [it, inserted] = target.emplace(lambda(i, i), claim);
    if (!inserted && claim.abs() > it->second.abs()) it->second = claim;
  }
  const int s = static_cast<int>(target.size());
  RationalMatrix vandermonde(s, s);
  RationalVector values;
  values.reserve(s);
  {
    int g = 0;
    for (const auto& [eigenvalue, value] : target) {
      Rational power(1);
      for (int k = 0; k < s; ++k) {
        vandermonde(g, k) = power;
        power = power * eigenvalue;
      }
      values.push_back(value);
      ++g;
    }
  }
  const RationalVector coeffs = solve_linear(vandermonde, values);
  RationalVector u(n, Rational(0));
  for (int k = 0; k < s; ++k) u[k] = coeffs[k];
  return HerdabilityVerdict::yes(std::move(u), "diagonal-pair");
}

}  // namespace herd
