#pragma once

#include <optional>
#include <vector>

#include "herd/matrix.hpp"

namespace herd {

/// A linear time-invariant pair (A, B). When B is a selection matrix
/// (distinct canonical columns), leader_indices holds the 0-based selected
/// node of each column, and the two representations stay consistent.
struct SystemPair {
  RationalMatrix A;
  RationalMatrix B;
  std::optional<std::vector<int>> leader_indices;

  SystemPair(RationalMatrix a, RationalMatrix b);

  /// Builds the selection matrix whose columns are the canonical vectors of
  /// the given 0-based leaders, in ascending index order.
  static SystemPair from_leaders(const RationalMatrix& a, std::vector<int> leaders);

  int state_dim() const { return A.rows(); }
  int input_dim() const { return B.cols(); }
  bool has_selection_input() const { return leader_indices.has_value(); }
};

/// Detects whether b consists of distinct canonical columns; returns the
/// selected row per column when it does.
std::optional<std::vector<int>> selection_leaders(const RationalMatrix& b);

/// [B | AB | A^2 B | ... | A^{n-1} B], column blocks in ascending power
/// order; within a block, columns keep B's order. Shape n x (n*m).
RationalMatrix controllability_matrix(const SystemPair& pair);

/// A^k B by repeated multiplication.
RationalMatrix matrix_power_column(const RationalMatrix& a, const RationalMatrix& b, int k);

}  // namespace herd
