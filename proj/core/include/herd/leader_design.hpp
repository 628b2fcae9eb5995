#pragma once

#include <vector>

#include "herd/matrix.hpp"
#include "herd/verdict.hpp"

namespace herd {

/// A herdable leader set together with the verdict that proves it.
struct LeaderSetVerdict {
  std::vector<int> leaders;  // ascending 0-based node indices
  HerdabilityVerdict verdict;
};

/// All minimal herdable leader sets found within the cardinality budget,
/// in canonical order (cardinality, then lexicographic).
struct DesignResult {
  std::vector<LeaderSetVerdict> minimal_sets;
  long explored = 0;  // candidate sets actually evaluated
  int budget = 0;
};

/// Builds the selection matrix of the given leaders (columns ascending) and
/// returns the direct verdict.
HerdabilityVerdict herdable_with_leaders(const RationalMatrix& a, const std::vector<int>& leaders);

/// Enumerates candidate sets cardinality-ascending, lexicographic within a
/// cardinality. Adding a leader only ever enlarges the controllability
/// image, so supersets of herdable sets are pruned; prune = false evaluates
/// everything and must find the same family (checked by tests).
DesignResult minimal_herdable_leader_sets(const RationalMatrix& a, int max_size,
                                          bool prune = true);

}  // namespace herd
