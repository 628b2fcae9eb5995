#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "herd/reductions.hpp"
#include "herd/system.hpp"
#include "herd/verdict.hpp"

namespace herd {

/// sufficient criteria only ever imply herdable; iff criteria decide both
/// ways whenever their structural preconditions hold.
enum class CriterionStrength { sufficient, iff };

std::string to_string(CriterionStrength s);

/// Outcome of one structural criterion. implied_herdable is present exactly
/// when hypotheses_hold; evidence carries the facts behind the decision
/// (partitions, witnesses, offending pairs) as ordered key/value pairs.
struct CriterionReport {
  std::string criterion;
  CriterionStrength strength = CriterionStrength::sufficient;
  bool hypotheses_hold = false;
  std::optional<bool> implied_herdable;
  std::vector<std::pair<std::string, std::string>> evidence;
};

/// Clustering-balanced graph whose leader set is exactly one cluster, and
/// every follower has a leader strictly closer to it than to any node of the
/// clusters other than the leaders' and its own. Sufficient.
CriterionReport check_cluster_leader_criterion(const SystemPair& pair);

/// Structurally balanced graph with leaders in both clusters, and every
/// follower has a same-cluster leader strictly closer to it than to any
/// follower of the other cluster. Sufficient.
CriterionReport check_split_leader_criterion(const SystemPair& pair);

/// Single-leader undirected tree whose edges between consecutive distance
/// layers all share one sign, layer by layer. Sufficient.
CriterionReport check_tree_layer_sign_criterion(const SystemPair& pair);

/// Single-leader undirected tree of depth at most 1: herdable iff all edges
/// share one sign. Exact.
CriterionReport check_tree_depth1_criterion(const SystemPair& pair);

/// Single-leader undirected tree of depth at most 2: herdable iff, whenever
/// two depth-1 followers carry the same summed squared child-edge weight,
/// their leader edges agree in sign and their child edges are jointly zero
/// or unisigned. Exact.
CriterionReport check_tree_depth2_criterion(const SystemPair& pair);

/// Aggregate outcome: every applicable criterion's report in canonical
/// order, the direct verdict on the input pair (always computed, always the
/// ground truth), the reduction trace, and any detected disagreement
/// between an exact method and the direct verdict.
struct CriteriaRun {
  std::vector<CriterionReport> reports;
  HerdabilityVerdict verdict;
  ReductionTrace trace;
  std::vector<std::string> consistency_failures;
};

/// Direct decision: the empty pair is herdable by convention, everything
/// else goes through exact feasibility on the controllability matrix.
HerdabilityVerdict decide_herdability(const SystemPair& pair);

/// Normalizes the input when needed, cross-checks the reductions, runs the
/// applicable criteria, and reports everything against the direct verdict.
CriteriaRun run_all_criteria(const SystemPair& pair);

/// Cross-checks finished criterion reports against a direct verdict: an iff
/// criterion must agree, a sufficient one must not imply herdable when the
/// verdict says otherwise. Returns the failures found (empty = consistent).
std::vector<std::string> criteria_consistency_failures(const std::vector<CriterionReport>& reports,
                                                       const HerdabilityVerdict& verdict);

}  // namespace herd
