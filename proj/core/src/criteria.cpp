#include "herd/criteria.hpp"

#include <algorithm>
#include <string>

#include "herd/errors.hpp"
#include "herd/graph.hpp"
#include "herd/positivity.hpp"

namespace herd {

std::string to_string(CriterionStrength s) {
  return s == CriterionStrength::iff ? "iff" : "sufficient";
}

namespace {

// Node labels in evidence are 1-based, matching the model-file numbering.
std::string node_label(int v) { return std::to_string(v + 1); }

std::string node_set_label(const std::vector<int>& nodes) {
  std::string out = "{";
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0) out += ",";
    out += node_label(nodes[i]);
  }
  out += "}";
  return out;
}

std::string partition_label(const ClusterPartition& partition) {
  std::string out;
  for (size_t c = 0; c < partition.clusters.size(); ++c) {
    if (c > 0) out += " | ";
    out += node_set_label(partition.clusters[c]);
  }
  return out;
}

char sign_char(const Rational& x) {
  const int s = x.sign();
  return s > 0 ? '+' : (s < 0 ? '-' : '0');
}

std::vector<int> require_selection_leaders(const SystemPair& pair, const char* criterion) {
  if (!pair.has_selection_input()) {
    throw InvalidInputError(std::string(criterion) + " criterion requires a selection input matrix");
  }
  return *pair.leader_indices;
}

bool zero_or_unisigned(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); }) ||
         is_unisigned(v);
}

/// Leader strictly closer to target than to every node in rivals, with a
/// finite distance to the target.
std::optional<int> closest_leader_witness(const SignedDigraph& g, const std::vector<int>& leaders,
                                          int target, const std::vector<int>& rivals) {
  for (int leader : leaders) {
    const std::vector<int>& dist = g.distances_from(leader);
    if (dist[target] == kUnreachable) continue;
    const bool strict = std::all_of(rivals.begin(), rivals.end(),
                                    [&](int j) { return closer(dist[target], dist[j]); });
    if (strict) return leader;
  }
  return std::nullopt;
}

struct TreeContext {
  SignedDigraph graph;
  int leader;
  TreeLayers layers;
};

TreeContext tree_context(const SystemPair& pair, const char* criterion, int max_depth) {
  const std::vector<int> leaders = require_selection_leaders(pair, criterion);
  if (leaders.size() != 1) {
    throw InvalidInputError(std::string(criterion) + " criterion requires a single leader");
  }
  SignedDigraph g(pair.A);
  if (!is_undirected_tree(g)) {
    throw InvalidInputError(std::string(criterion) + " criterion requires an undirected tree");
  }
  TreeLayers layers = layer_decomposition(g, leaders[0]);
  if (max_depth >= 0 && layers.depth() > max_depth) {
    throw InvalidInputError(std::string(criterion) + " criterion requires followers within distance " +
                            std::to_string(max_depth));
  }
  return TreeContext{std::move(g), leaders[0], std::move(layers)};
}

}  // namespace

CriterionReport check_cluster_leader_criterion(const SystemPair& pair) {
  const std::vector<int> leaders = require_selection_leaders(pair, "cluster-leader");
  CriterionReport report;
  report.criterion = "cluster-leader";
  report.strength = CriterionStrength::sufficient;

  SignedDigraph g(pair.A);
  const auto partition = clustering_balance(g, leaders);
  if (!partition) {
    report.hypotheses_hold = false;
    report.evidence.emplace_back("balance", "no clustering-balanced partition has the leaders as one cluster");
    return report;
  }
  report.evidence.emplace_back("partition", partition_label(*partition));
  const auto finest = clustering_balance(g);
  const bool coarsened =
      !finest || std::none_of(finest->clusters.begin(), finest->clusters.end(),
                              [&](const std::vector<int>& c) { return c == leaders; });
  if (coarsened) report.evidence.emplace_back("leader-cluster-coarsened", "true");

  const size_t k = partition->clusters.size();
  for (size_t p = 1; p < k; ++p) {
    std::vector<int> rivals;
    for (size_t h = 1; h < k; ++h) {
      if (h == p) continue;
      rivals.insert(rivals.end(), partition->clusters[h].begin(), partition->clusters[h].end());
    }
    for (int i : partition->clusters[p]) {
      const auto witness = closest_leader_witness(g, leaders, i, rivals);
      if (!witness) {
        report.hypotheses_hold = false;
        report.evidence.emplace_back("unwitnessed-follower", node_label(i));
        return report;
      }
      const int d = g.distances_from(*witness)[i];
      report.evidence.emplace_back("witness[" + node_label(i) + "]",
                                   "leader=" + node_label(*witness) + " distance=" + std::to_string(d));
    }
  }
  report.hypotheses_hold = true;
  report.implied_herdable = true;
  return report;
}

CriterionReport check_split_leader_criterion(const SystemPair& pair) {
  const std::vector<int> leaders = require_selection_leaders(pair, "split-leader");
  CriterionReport report;
  report.criterion = "split-leader";
  report.strength = CriterionStrength::sufficient;

  SignedDigraph g(pair.A);
  const std::vector<ClusterPartition> partitions = structural_partitions(g);
  if (partitions.empty()) {
    report.hypotheses_hold = false;
    report.evidence.emplace_back("balance", "graph is not structurally balanced");
    return report;
  }

  std::vector<bool> is_leader(pair.state_dim(), false);
  for (int v : leaders) is_leader[v] = true;

  // The split is existential over valid partitions; record the first
  // failure among two-sided ones when none works.
  std::pair<std::string, std::string> failure{"clusters",
                                              "no valid partition splits into two clusters"};
  bool failure_recorded = false;
  for (const ClusterPartition& partition : partitions) {
    if (partition.clusters.size() != 2) continue;
    std::vector<std::vector<int>> cluster_leaders(2);
    std::vector<std::vector<int>> cluster_followers(2);
    for (int side = 0; side < 2; ++side) {
      for (int v : partition.clusters[side]) {
        (is_leader[v] ? cluster_leaders[side] : cluster_followers[side]).push_back(v);
      }
    }
    if (cluster_leaders[0].empty() || cluster_leaders[1].empty()) {
      if (!failure_recorded) {
        failure = {"leaders", "leaders do not intersect both clusters of " +
                                  partition_label(partition)};
        failure_recorded = true;
      }
      continue;
    }

    std::vector<std::pair<std::string, std::string>> witnesses;
    bool satisfied = true;
    for (int side = 0; side < 2 && satisfied; ++side) {
      const std::vector<int>& rivals = cluster_followers[1 - side];
      for (int i : cluster_followers[side]) {
        const auto witness = closest_leader_witness(g, cluster_leaders[side], i, rivals);
        if (!witness) {
          if (!failure_recorded) {
            failure = {"unwitnessed-follower",
                       node_label(i) + " in " + partition_label(partition)};
            failure_recorded = true;
          }
          satisfied = false;
          break;
        }
        const int d = g.distances_from(*witness)[i];
        witnesses.emplace_back("witness[" + node_label(i) + "]",
                               "leader=" + node_label(*witness) + " distance=" + std::to_string(d));
      }
    }
    if (satisfied) {
      report.evidence.emplace_back("partition", partition_label(partition));
      for (auto& w : witnesses) report.evidence.push_back(std::move(w));
      report.hypotheses_hold = true;
      report.implied_herdable = true;
      return report;
    }
  }

  report.hypotheses_hold = false;
  report.evidence.emplace_back("partition", partition_label(partitions.front()));
  report.evidence.push_back(std::move(failure));
  return report;
}

CriterionReport check_tree_layer_sign_criterion(const SystemPair& pair) {
  const TreeContext ctx = tree_context(pair, "tree-layer-sign", -1);
  CriterionReport report;
  report.criterion = "tree-layer-sign";
  report.strength = CriterionStrength::sufficient;

  std::string signs;
  for (int d = 0; d < ctx.layers.depth(); ++d) {
    int layer_sign = 0;
    for (int v : ctx.layers.layers[d]) {
      const int s = ctx.graph.adjacency()(v, ctx.layers.parent[v]).sign();
      if (layer_sign == 0) layer_sign = s;
      if (s != layer_sign) {
        report.hypotheses_hold = false;
        report.evidence.emplace_back("mixed-layer", std::to_string(d + 1));
        return report;
      }
    }
    if (!signs.empty()) signs += ' ';
    signs += layer_sign > 0 ? '+' : '-';
  }
  report.evidence.emplace_back("layer-signs", signs);
  report.hypotheses_hold = true;
  report.implied_herdable = true;
  return report;
}

CriterionReport check_tree_depth1_criterion(const SystemPair& pair) {
  const TreeContext ctx = tree_context(pair, "tree-depth-1", 1);
  CriterionReport report;
  report.criterion = "tree-depth-1";
  report.strength = CriterionStrength::iff;
  report.hypotheses_hold = true;

  RationalVector edges;
  std::string signs;
  if (ctx.layers.depth() == 1) {
    for (int v : ctx.layers.layers[0]) {
      edges.push_back(ctx.graph.adjacency()(v, ctx.leader));
      if (!signs.empty()) signs += ' ';
      signs += sign_char(edges.back());
    }
  }
  report.evidence.emplace_back("edge-signs", signs);
  report.implied_herdable = edges.empty() || is_unisigned(edges);
  return report;
}

CriterionReport check_tree_depth2_criterion(const SystemPair& pair) {
  const TreeContext ctx = tree_context(pair, "tree-depth-2", 2);
  CriterionReport report;
  report.criterion = "tree-depth-2";
  report.strength = CriterionStrength::iff;
  report.hypotheses_hold = true;

  const std::vector<int> f1 = ctx.layers.depth() >= 1 ? ctx.layers.layers[0] : std::vector<int>{};
  const std::vector<int> f2 = ctx.layers.depth() >= 2 ? ctx.layers.layers[1] : std::vector<int>{};
  const int m1 = static_cast<int>(f1.size());
  const int m2 = static_cast<int>(f2.size());
  const RationalMatrix& a = ctx.graph.adjacency();

  RationalVector a21(m1);
  for (int i = 0; i < m1; ++i) a21[i] = a(f1[i], ctx.leader);
  RationalMatrix a23(m1, m2);
  RationalMatrix a32(m2, m1);
  for (int i = 0; i < m1; ++i) {
    for (int w = 0; w < m2; ++w) {
      a23(i, w) = a(f1[i], f2[w]);
      a32(w, i) = a(f2[w], f1[i]);
    }
  }
  const RationalMatrix lambda = a23 * a32;
  if (!lambda.is_diagonal()) {
    throw InternalError("depth-2 child-edge product is not diagonal on a tree");
  }
  {
    std::string diag;
    for (int i = 0; i < m1; ++i) {
      if (!diag.empty()) diag += ' ';
      diag += lambda(i, i).str();
    }
    report.evidence.emplace_back("squared-child-weights", diag);
  }

  for (int i = 0; i < m1; ++i) {
    for (int j = i; j < m1; ++j) {
      if (lambda(i, i) != lambda(j, j)) continue;
      if (i != j && (a21[i] * a21[j]).sign() <= 0) {
        report.implied_herdable = false;
        report.evidence.emplace_back("offending-pair",
                                     "(" + node_label(f1[i]) + "," + node_label(f1[j]) + ")");
        report.evidence.emplace_back("failed-condition", "leader-edge-signs");
        return report;
      }
      RationalVector combined(m2);
      for (int w = 0; w < m2; ++w) {
        combined[w] = i == j ? a32(w, i) : a32(w, i) + a32(w, j);
      }
      if (!zero_or_unisigned(combined)) {
        report.implied_herdable = false;
        report.evidence.emplace_back("offending-pair",
                                     "(" + node_label(f1[i]) + "," + node_label(f1[j]) + ")");
        report.evidence.emplace_back("failed-condition", "child-edge-signs");
        return report;
      }
    }
  }
  report.implied_herdable = true;
  return report;
}

HerdabilityVerdict decide_herdability(const SystemPair& pair) {
  if (pair.state_dim() == 0) {
    return HerdabilityVerdict::yes(RationalVector{}, "empty-state");
  }
  return strictly_positive_in_image(controllability_matrix(pair));
}

CriteriaRun run_all_criteria(const SystemPair& pair) {
  CriteriaRun run;
  run.verdict = decide_herdability(pair);

  std::optional<SystemPair> criteria_pair;
  if (pair.has_selection_input()) criteria_pair = pair;
  bool renumbered = false;
  std::optional<CriterionReport> diagonal_report;

  if (pair.state_dim() > 0) {
    try {
      const NormalizedPair norm = normalize_input(pair);
      ReductionStep normalize_step;
      normalize_step.name = "normalize-input";
      normalize_step.input_shape = {pair.state_dim(), pair.input_dim()};
      normalize_step.output_shape = {norm.pair.state_dim(), norm.pair.input_dim()};
      normalize_step.input_transform = norm.input_transform;
      normalize_step.row_permutation = norm.row_permutation;
      run.trace.steps.push_back(std::move(normalize_step));
      if (!criteria_pair) {
        criteria_pair = norm.pair;
        renumbered = true;
      }
      if (decide_herdability(norm.pair).herdable != run.verdict.herdable) {
        run.consistency_failures.push_back("input normalization changed the verdict");
      }

      const SystemPair reduced = leader_block_reduction(norm.pair);
      ReductionStep block_step;
      block_step.name = "leader-block";
      block_step.input_shape = {norm.pair.state_dim(), norm.pair.input_dim()};
      block_step.output_shape = {reduced.state_dim(), reduced.input_dim()};
      block_step.block_split = norm.pair.input_dim();
      run.trace.steps.push_back(std::move(block_step));
      if (decide_herdability(reduced).herdable != run.verdict.herdable) {
        run.consistency_failures.push_back("leader-block reduction changed the verdict");
      }

      if (reduced.state_dim() > 0 && reduced.input_dim() == 1 && reduced.A.is_diagonal()) {
        const RationalVector gamma = reduced.B.col(0);
        const bool zero_free =
            std::none_of(gamma.begin(), gamma.end(), [](const Rational& x) { return x.is_zero(); });
        if (zero_free) {
          const HerdabilityVerdict dv = diagonal_pair_herdability(reduced.A, gamma);
          CriterionReport rep;
          rep.criterion = "diagonal-pair";
          rep.strength = CriterionStrength::iff;
          rep.hypotheses_hold = true;
          rep.implied_herdable = dv.herdable;
          rep.evidence.emplace_back("applies-to", "reduced pair");
          diagonal_report = std::move(rep);
        }
      }
    } catch (const NotNormalizableError&) {
      // Nonzero rows of B are dependent (or B is zero); the direct verdict
      // above remains the only decision path.
    }
  }

  if (criteria_pair && criteria_pair->state_dim() > 0) {
    const SystemPair& cp = *criteria_pair;
    run.reports.push_back(check_cluster_leader_criterion(cp));
    run.reports.push_back(check_split_leader_criterion(cp));
    if (cp.input_dim() == 1) {
      SignedDigraph g(cp.A);
      if (is_undirected_tree(g)) {
        const int depth = layer_decomposition(g, (*cp.leader_indices)[0]).depth();
        run.reports.push_back(check_tree_layer_sign_criterion(cp));
        if (depth <= 1) run.reports.push_back(check_tree_depth1_criterion(cp));
        if (depth <= 2) run.reports.push_back(check_tree_depth2_criterion(cp));
      }
    }
    if (renumbered) {
      for (CriterionReport& rep : run.reports) {
        rep.evidence.emplace_back("node-numbering", "after input normalization");
      }
    }
  }
  if (diagonal_report) run.reports.push_back(std::move(*diagonal_report));

  for (std::string& failure : criteria_consistency_failures(run.reports, run.verdict)) {
    run.consistency_failures.push_back(std::move(failure));
  }
  return run;
}

std::vector<std::string> criteria_consistency_failures(const std::vector<CriterionReport>& reports,
                                                       const HerdabilityVerdict& verdict) {
  std::vector<std::string> failures;
  for (const CriterionReport& rep : reports) {
    if (!rep.hypotheses_hold || !rep.implied_herdable.has_value()) continue;
    if (rep.strength == CriterionStrength::iff && *rep.implied_herdable != verdict.herdable) {
      failures.push_back(rep.criterion + " disagrees with the direct verdict");
    }
    if (rep.strength == CriterionStrength::sufficient && *rep.implied_herdable &&
        !verdict.herdable) {
      failures.push_back(rep.criterion + " implies herdable but the direct verdict disagrees");
    }
  }
  return failures;
}

}  // namespace herd
