#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "herd/matrix.hpp"
#include "herd/system.hpp"
#include "herd/verdict.hpp"

namespace herd {

/// Verdict-equivalent form (P A P^T, P B T) with the zero columns of P B T
/// dropped, so the returned input matrix is [I_r; 0] and the leaders occupy
/// the first r states.
struct NormalizedPair {
  SystemPair pair;
  RationalMatrix input_transform;    // T, nonsingular m x m
  std::vector<int> row_permutation;  // new row p held original row row_permutation[p]
};

/// One recorded transformation. input_transform and row_permutation are set
/// for "normalize-input", block_split for "leader-block".
struct ReductionStep {
  std::string name;
  std::pair<int, int> input_shape;   // (n, m) before
  std::pair<int, int> output_shape;  // (n, m) after
  std::optional<RationalMatrix> input_transform;
  std::optional<std::vector<int>> row_permutation;
  std::optional<int> block_split;
};

/// Audit trail of a reduction chain; replaying it on the original pair must
/// reproduce the reduced pair exactly.
struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

/// P with P(i, perm[i]) = 1, so (P x)_i = x_{perm[i]}.
RationalMatrix permutation_matrix(const std::vector<int>& perm);

/// Requires the nonzero rows of B to be linearly independent (throws
/// NotNormalizableError otherwise, or when B has no nonzero row while
/// n >= 1). T combines the exact inverse of a lowest-index nonsingular
/// column block with a kernel basis; P moves the leader rows to the top,
/// lowest original indices first.
NormalizedPair normalize_input(const SystemPair& pair);

/// For B = [B1; 0] with B1 of full row rank r, returns the pair (A22, A21)
/// of the split of A after row/column r. The verdict is preserved; r = n
/// yields the empty pair, herdable by convention.
SystemPair leader_block_reduction(const SystemPair& pair);

/// Applies the recorded steps to the given pair.
SystemPair replay_reductions(const ReductionTrace& trace, const SystemPair& original);

/// Decides herdability of (Lambda, gamma) for diagonal Lambda and a zero-free
/// input column: herdable iff equal diagonal entries always carry same-sign
/// gamma entries. Herdable instances get a primal certificate from solving a
/// Vandermonde system on the distinct diagonal values; the rest get the dual
/// gamma_j e_i - gamma_i e_j of an offending pair, sign-normalized.
HerdabilityVerdict diagonal_pair_herdability(const RationalMatrix& lambda,
                                             const RationalVector& gamma);

}  // namespace herd
