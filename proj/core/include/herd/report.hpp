#pragma once

#include <optional>
#include <string>
#include <vector>

#include "herd/criteria.hpp"
#include "herd/graph.hpp"
#include "herd/leader_design.hpp"
#include "herd/synthesis.hpp"
#include "herd/system.hpp"

namespace herd {

inline constexpr int kReportSchemaVersion = 1;

/// Everything a command may want to publish. Node and leader indices are
/// 1-based in the emitted report, matching the model-file convention;
/// certificates and state vectors are positional and need no conversion.
struct Report {
  std::string command;
  std::string model_name;
  std::optional<HerdabilityVerdict> verdict;
  std::optional<CriteriaRun> criteria;
  bool balance_requested = false;  // distinguishes "not asked" from "not balanced"
  std::optional<ClusterPartition> clustering;
  std::optional<ClusterPartition> structural;
  std::optional<TreeLayers> tree;
  std::optional<RationalVector> x0;  // echoed so plans re-verify standalone
  std::optional<HerdingPlan> plan;
  std::optional<DesignResult> design;
  long timing_ms = 0;  // the one field excluded from determinism checks
};

/// Deterministic JSON (sorted keys, rationals as exact strings); only
/// timing_ms varies between identical runs.
std::string report_to_json(const Report& report);

/// Human-readable summary of the same content.
std::string report_to_text(const Report& report);

/// Re-checks every certificate and plan inside a JSON report against the
/// model pair, using exact arithmetic only: verdict certificates against
/// the controllability matrix, plans by simulation, design entries against
/// their own selection pairs. Returns the problems found (empty = clean).
std::vector<std::string> verify_report(const SystemPair& pair, const std::string& report_json);

}  // namespace herd
