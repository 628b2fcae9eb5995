#pragma once

#include <optional>
#include <vector>

#include "herd/matrix.hpp"
#include "herd/verdict.hpp"

namespace herd {

/// Decides whether Im(M) contains a strictly positive vector.
///
/// Feasibility of {u : M u >= 1} is settled by an exact-rational phase-1
/// simplex with Bland's rule. Exactly one branch fires: herdable with u
/// scaled so M u >= 1, or a nonzero y >= 0 with y^T M = 0 recovered from
/// the optimal dual values (Gordan-type alternative).
HerdabilityVerdict strictly_positive_in_image(const RationalMatrix& m);

/// True iff v != 0 and all nonzero entries share one sign.
bool is_unisigned(const RationalVector& v);

/// Looks for unisigned columns whose nonzero patterns jointly cover every
/// row. When they do, returns sign-matched coefficients (over all columns,
/// zero elsewhere) whose combination is strictly positive. Sufficient, not
/// necessary.
std::optional<RationalVector> unisigned_cover_check(const RationalMatrix& m);

/// Half-open index range [begin, end).
struct IndexRange {
  int begin = 0;
  int end = 0;
  int size() const { return end - begin; }
};

/// Block upper-triangular sufficiency: partitions must tile M and every
/// below-diagonal block must be zero (invalid input otherwise). If each
/// diagonal block's image contains a strictly positive vector, assembles u
/// with M u >> 0 bottom-up; otherwise returns absent.
std::optional<RationalVector> block_triangular_positive(const RationalMatrix& m,
                                                        const std::vector<IndexRange>& row_partition,
                                                        const std::vector<IndexRange>& col_partition);

/// Exact certificate re-checks.
bool verify_primal_certificate(const RationalMatrix& m, const RationalVector& u);
bool verify_dual_certificate(const RationalMatrix& m, const RationalVector& y);

}  // namespace herd
