#include "herd/system.hpp"

#include <algorithm>

#include "herd/errors.hpp"

namespace herd {

SystemPair::SystemPair(RationalMatrix a, RationalMatrix b) : A(std::move(a)), B(std::move(b)) {
  if (!A.is_square()) throw InvalidInputError("A must be square");
  if (B.rows() != A.rows()) throw InvalidInputError("B must have as many rows as A");
  if (A.rows() > 0 && B.cols() < 1) throw InvalidInputError("B must have at least one column");
  leader_indices = selection_leaders(B);
}

SystemPair SystemPair::from_leaders(const RationalMatrix& a, std::vector<int> leaders) {
  if (leaders.empty()) throw InvalidInputError("leader set must be nonempty");
  std::sort(leaders.begin(), leaders.end());
  if (std::adjacent_find(leaders.begin(), leaders.end()) != leaders.end()) {
    throw InvalidInputError("duplicate leader index");
  }
  const int n = a.rows();
  for (int v : leaders) {
    if (v < 0 || v >= n) throw InvalidInputError("leader index out of range");
  }
  RationalMatrix b(n, static_cast<int>(leaders.size()));
  for (size_t j = 0; j < leaders.size(); ++j) b(leaders[j], static_cast<int>(j)) = 1;
  return SystemPair(a, b);
}

std::optional<std::vector<int>> selection_leaders(const RationalMatrix& b) {
  std::vector<int> leaders;
  leaders.reserve(b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    int hit = -1;
    for (int i = 0; i < b.rows(); ++i) {
      if (b(i, j).is_zero()) continue;
      if (hit >= 0 || b(i, j) != Rational(1)) return std::nullopt;
      hit = i;
    }
    if (hit < 0) return std::nullopt;
    leaders.push_back(hit);
  }
  std::vector<int> sorted = leaders;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  return sorted;
}

RationalMatrix controllability_matrix(const SystemPair& pair) {
  const int n = pair.state_dim();
  const int m = pair.input_dim();
  RationalMatrix r(n, n * m);
  RationalMatrix power_block = pair.B;
  for (int k = 0; k < n; ++k) {
    if (k > 0) power_block = pair.A * power_block;
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < n; ++i) r(i, k * m + j) = power_block(i, j);
    }
  }
  return r;
}

RationalMatrix matrix_power_column(const RationalMatrix& a, const RationalMatrix& b, int k) {
  if (k < 0) throw InvalidInputError("negative power");
  if (!a.is_square() || a.cols() != b.rows()) throw InvalidInputError("matrix_power_column shape mismatch");
  RationalMatrix out = b;
  for (int i = 0; i < k; ++i) out = a * out;
  return out;
}

}  // namespace herd
