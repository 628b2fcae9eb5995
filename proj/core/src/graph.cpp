#include "herd/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>

#include "herd/errors.hpp"

namespace herd {

SignedDigraph::SignedDigraph(RationalMatrix a) : a_(std::move(a)) {
  if (!a_.is_square()) throw InvalidInputError("adjacency matrix must be square");
  const int n = a_.rows();
  out_.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a_(i, j).is_zero()) continue;
      arcs_.push_back(Arc{j, i, a_(i, j)});
      out_[j].push_back(i);
    }
  }
  cache_ = std::make_shared<DistanceCache>();
  cache_->rows.resize(n);
}

const std::vector<int>& SignedDigraph::out_neighbors(int node) const {
  if (node < 0 || node >= node_count()) throw InvalidInputError("node out of range");
  return out_[node];
}

const std::vector<int>& SignedDigraph::distances_from(int source) const {
  if (source < 0 || source >= node_count()) throw InvalidInputError("source out of range");
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto& slot = cache_->rows[source];
  if (!slot) {
    std::vector<int> dist(node_count(), kUnreachable);
    dist[source] = 0;
    std::queue<int> frontier;
    frontier.push(source);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (int w : out_[v]) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[v] + 1;
          frontier.push(w);
        }
      }
    }
    slot = std::move(dist);
  }
  return *slot;
}

SignedDigraph graph_from_adjacency(const RationalMatrix& a) { return SignedDigraph(a); }

int ClusterPartition::cluster_of(int node) const {
  for (size_t c = 0; c < clusters.size(); ++c) {
    if (std::find(clusters[c].begin(), clusters[c].end(), node) != clusters[c].end()) {
      return static_cast<int>(c);
    }
  }
  return -1;
}

namespace {

// Union-find over the undirected support of positive entries.
class DisjointSets {
public:
  explicit DisjointSets(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
  std::vector<int> parent_;
};

// Components of the positive-edge undirected support, in first-node order.
std::vector<std::vector<int>> positive_components(const RationalMatrix& a,
                                                  const std::vector<int>& nodes) {
  DisjointSets ds(static_cast<int>(nodes.size()));
  for (size_t p = 0; p < nodes.size(); ++p) {
    for (size_t q = p + 1; q < nodes.size(); ++q) {
      if (a(nodes[p], nodes[q]).sign() > 0 || a(nodes[q], nodes[p]).sign() > 0) {
        ds.unite(static_cast<int>(p), static_cast<int>(q));
      }
    }
  }
  std::vector<std::vector<int>> comps;
  std::vector<int> comp_index(nodes.size(), -1);
  for (size_t p = 0; p < nodes.size(); ++p) {
    const int root = ds.find(static_cast<int>(p));
    if (comp_index[root] < 0) {
      comp_index[root] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[comp_index[root]].push_back(nodes[p]);
  }
  return comps;
}

// A component is sign-valid when no entry between two of its nodes
// (diagonal included) is negative.
bool components_sign_valid(const RationalMatrix& a, const std::vector<std::vector<int>>& comps) {
  for (const auto& comp : comps) {
    for (int i : comp) {
      for (int j : comp) {
        if (a(i, j).sign() < 0) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<ClusterPartition> clustering_balance(
    const SignedDigraph& g, const std::optional<std::vector<int>>& required_first_cluster) {
  const RationalMatrix& a = g.adjacency();
  const int n = g.node_count();

  if (!required_first_cluster) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    auto comps = positive_components(a, all);
    if (!components_sign_valid(a, comps)) return std::nullopt;
    return ClusterPartition{std::move(comps), PartitionKind::clustering};
  }

  std::vector<int> first = *required_first_cluster;
  std::sort(first.begin(), first.end());
  first.erase(std::unique(first.begin(), first.end()), first.end());
  if (first.size() != required_first_cluster->size()) {
    throw InvalidInputError("required first cluster has duplicates");
  }
  for (int v : first) {
    if (v < 0 || v >= n) throw InvalidInputError("required first cluster node out of range");
  }

  std::vector<bool> in_first(n, false);
  for (int v : first) in_first[v] = true;
  // Intra-cluster entries of the required set must be >= 0, all entries
  // between the set and the rest <= 0.
  for (int i : first) {
    for (int j : first) {
      if (a(i, j).sign() < 0) return std::nullopt;
    }
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v) {
    if (!in_first[v]) rest.push_back(v);
  }
  for (int i : first) {
    for (int j : rest) {
      if (a(i, j).sign() > 0 || a(j, i).sign() > 0) return std::nullopt;
    }
  }

  auto comps = positive_components(a, rest);
  if (!components_sign_valid(a, comps)) return std::nullopt;

  ClusterPartition partition;
  partition.kind = PartitionKind::clustering;
  partition.clusters.push_back(std::move(first));
  for (auto& c : comps) partition.clusters.push_back(std::move(c));
  return partition;
}

namespace {

// Canonical 2-coloring data for the negative-edge graph over positive
// components: colors within a meta-component are forced up to one swap.
struct MetaColoring {
  std::vector<std::vector<int>> comps;
  std::vector<int> color;  // per component, canonical side
  std::vector<int> meta;   // per component, connected meta-component id
  int meta_count = 0;
};

std::optional<MetaColoring> negative_meta_coloring(const RationalMatrix& a) {
  const int n = a.rows();
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  MetaColoring out;
  out.comps = positive_components(a, all);
  if (!components_sign_valid(a, out.comps)) return std::nullopt;

  const int k = static_cast<int>(out.comps.size());
  std::vector<int> comp_of(n, -1);
  for (int c = 0; c < k; ++c) {
    for (int v : out.comps[c]) comp_of[v] = c;
  }

  std::vector<std::vector<int>> neg(k);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a(i, j).sign() < 0 && comp_of[i] != comp_of[j]) {
        neg[comp_of[i]].push_back(comp_of[j]);
        neg[comp_of[j]].push_back(comp_of[i]);
      }
    }
  }

  out.color.assign(k, -1);
  out.meta.assign(k, -1);
  for (int start = 0; start < k; ++start) {
    if (out.color[start] >= 0) continue;
    const int id = out.meta_count++;
    out.color[start] = 0;
    out.meta[start] = id;
    std::queue<int> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const int c = frontier.front();
      frontier.pop();
      for (int d : neg[c]) {
        if (out.color[d] < 0) {
          out.color[d] = 1 - out.color[c];
          out.meta[d] = id;
          frontier.push(d);
        } else if (out.color[d] == out.color[c]) {
          return std::nullopt;  // odd negative cycle
        }
      }
    }
  }
  return out;
}

ClusterPartition assemble_structural(const MetaColoring& m, const std::vector<int>& side_of_comp) {
  std::vector<int> side0;
  std::vector<int> side1;
  for (size_t c = 0; c < m.comps.size(); ++c) {
    auto& side = side_of_comp[c] == 0 ? side0 : side1;
    side.insert(side.end(), m.comps[c].begin(), m.comps[c].end());
  }
  std::sort(side0.begin(), side0.end());
  std::sort(side1.begin(), side1.end());
  ClusterPartition partition;
  partition.kind = PartitionKind::structural;
  partition.clusters.push_back(std::move(side0));
  if (!side1.empty()) partition.clusters.push_back(std::move(side1));
  return partition;
}

}  // namespace

std::optional<ClusterPartition> structural_balance(const SignedDigraph& g) {
  const auto meta = negative_meta_coloring(g.adjacency());
  if (!meta) return std::nullopt;
  return assemble_structural(*meta, meta->color);
}

std::vector<ClusterPartition> structural_partitions(const SignedDigraph& g) {
  const auto meta = negative_meta_coloring(g.adjacency());
  if (!meta) return {};

  // Component 0 holds node 0; pinning its meta-component's swap removes the
  // global side-exchange duplicate, so node 0 always sits in the first
  // cluster. Beyond 17 meta-components, only the canonical choice is kept.
  const int free = meta->meta_count - 1;
  const std::uint64_t count = free > 16 ? 1 : (std::uint64_t{1} << free);
  const int pinned = meta->meta[0];

  std::vector<ClusterPartition> partitions;
  partitions.reserve(count);
  std::vector<int> side(meta->comps.size());
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (size_t c = 0; c < meta->comps.size(); ++c) {
      const int m = meta->meta[c];
      const int slot = m < pinned ? m : m - 1;
      const bool flip = m != pinned && ((mask >> slot) & 1) != 0;
      side[c] = meta->color[c] ^ (flip ? 1 : 0);
    }
    partitions.push_back(assemble_structural(*meta, side));
  }
  return partitions;
}

bool is_undirected_tree(const SignedDigraph& g) {
  const RationalMatrix& a = g.adjacency();
  const int n = g.node_count();
  if (n == 0) return false;
  if (!a.is_symmetric()) return false;
  for (int i = 0; i < n; ++i) {
    if (!a(i, i).is_zero()) return false;
  }
  int edges = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!a(i, j).is_zero()) ++edges;
    }
  }
  if (edges != n - 1) return false;
  const std::vector<int>& dist = g.distances_from(0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

TreeLayers layer_decomposition(const SignedDigraph& g, int leader) {
  if (leader < 0 || leader >= g.node_count()) throw InvalidInputError("leader out of range");
  if (!is_undirected_tree(g)) throw InvalidInputError("graph is not an undirected tree");

  const std::vector<int>& dist = g.distances_from(leader);
  TreeLayers out;
  out.leader = leader;
  out.parent.assign(g.node_count(), kUnreachable);
  const int ecc = *std::max_element(dist.begin(), dist.end());
  out.layers.resize(ecc);
  for (int v = 0; v < g.node_count(); ++v) {
    if (v == leader) continue;
    out.layers[dist[v] - 1].push_back(v);
    for (int w : g.out_neighbors(v)) {
      if (dist[w] == dist[v] - 1) out.parent[v] = w;  // unique in a tree
    }
  }
  for (auto& layer : out.layers) std::sort(layer.begin(), layer.end());
  return out;
}

}  // namespace herd
