#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "herd/matrix.hpp"

namespace herd {

/// Unreachable nodes get distance kUnreachable.
inline constexpr int kUnreachable = -1;

/// True iff a is a strictly shorter distance than b, with kUnreachable as
/// infinity.
inline bool closer(int a, int b) {
  if (a == kUnreachable) return false;
  return b == kUnreachable || a < b;
}

/// Signed weighted digraph of a square matrix A: there is an arc j -> i,
/// with weight [A]_ij, iff [A]_ij != 0 (row = head, column = tail).
class SignedDigraph {
public:
  struct Arc {
    int from = 0;
    int to = 0;
    Rational weight;
  };

  explicit SignedDigraph(RationalMatrix a);

  int node_count() const { return a_.rows(); }
  const RationalMatrix& adjacency() const { return a_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& out_neighbors(int node) const;

  /// BFS distances along arc direction from source; memoized per source,
  /// compute-once and safe under concurrent readers.
  const std::vector<int>& distances_from(int source) const;

private:
  RationalMatrix a_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;

  struct DistanceCache {
    std::mutex mu;
    std::vector<std::optional<std::vector<int>>> rows;
  };
  std::shared_ptr<DistanceCache> cache_;
};

SignedDigraph graph_from_adjacency(const RationalMatrix& a);

enum class PartitionKind { clustering, structural };

/// Disjoint node sets covering [0, n); entries within a cluster are >= 0,
/// entries across clusters are <= 0 in the originating matrix.
struct ClusterPartition {
  std::vector<std::vector<int>> clusters;
  PartitionKind kind = PartitionKind::clustering;

  int cluster_of(int node) const;
};

/// Without a required first cluster, returns the finest valid partition:
/// connected components of the positive-edge undirected support, valid iff
/// no negative entry joins two nodes of one component. With one, returns a
/// valid partition whose first cluster equals exactly that set. Absent when
/// no valid partition exists.
std::optional<ClusterPartition> clustering_balance(
    const SignedDigraph& g, const std::optional<std::vector<int>>& required_first_cluster = std::nullopt);

/// Contracts positive components and 2-colors the negative-edge component
/// graph. Returns the (at most 2)-cluster partition, or absent when a
/// component has an internal negative entry or the component graph is not
/// bipartite. All-positive graphs yield a single cluster.
std::optional<ClusterPartition> structural_balance(const SignedDigraph& g);

/// Every valid structural partition, canonical one first: positive
/// components are sides-forced within each negative-edge meta-component,
/// and each meta-component may swap sides independently. Node 0 is kept in
/// the first cluster to avoid mirror duplicates. Empty when no valid
/// partition exists; beyond 17 meta-components only the canonical
/// partition is enumerated.
std::vector<ClusterPartition> structural_partitions(const SignedDigraph& g);

/// True iff A is symmetric with zero diagonal and its undirected support is
/// connected with exactly n-1 edges.
bool is_undirected_tree(const SignedDigraph& g);

/// Distance classes of the followers of a tree, plus the BFS parent map.
struct TreeLayers {
  int leader = 0;
  std::vector<std::vector<int>> layers;  // layers[d] = nodes at distance d+1
  std::vector<int> parent;               // parent[v], kUnreachable for the leader
  int depth() const { return static_cast<int>(layers.size()); }
};

/// Requires is_undirected_tree(g). Layer d holds the followers at distance
/// d+1 from the leader, ascending node order within a layer.
TreeLayers layer_decomposition(const SignedDigraph& g, int leader);

}  // namespace herd
