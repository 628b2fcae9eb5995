#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "herd/matrix.hpp"
#include "herd/system.hpp"

namespace herd {

/// Deterministic pseudo-random source for instance generation; one seed,
/// one stream, independent of the standard library's distribution details.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi], bounds inclusive.
  int uniform_int(int lo, int hi);
  /// True with probability percent/100.
  bool chance(int percent) { return uniform_int(1, 100) <= percent; }
  const Rational& pick(const std::vector<Rational>& pool);

private:
  std::mt19937_64 engine_;
};

/// +-1, +-2, +-3, +-1/2.
const std::vector<Rational>& default_weight_pool();
/// 1, 2, 3, 1/2.
const std::vector<Rational>& positive_weight_pool();

/// Each entry is drawn from the pool with probability density_percent/100,
/// zero otherwise.
RationalMatrix random_rational_matrix(Rng& rng, int rows, int cols,
                                      const std::vector<Rational>& pool, int density_percent);

/// Random (A, B) with the same entry law for both matrices.
SystemPair random_pair(Rng& rng, int n, int m, const std::vector<Rational>& pool,
                       int density_percent);

/// Random nonsingular matrix; falls back to a unit upper-triangular one
/// when dense draws keep coming out singular.
RationalMatrix random_nonsingular_matrix(Rng& rng, int n, const std::vector<Rational>& pool);

/// Pair with B = [B1; 0], B1 an r x m block of full row rank (1 <= r <= n,
/// r <= m) and random A.
SystemPair block_input_pair(Rng& rng, int n, int r, int m, const std::vector<Rational>& pool);

struct DiagonalPairInstance {
  RationalMatrix lambda;  // diagonal
  RationalVector gamma;   // zero-free
};

/// Diagonal pair whose eigenvalues are drawn from fewer distinct values
/// than n, forcing repetitions whenever n >= 2.
DiagonalPairInstance diagonal_pair_instance(Rng& rng, int n);

/// Single-leader undirected tree (leader = node 0, B = e_0) whose edges
/// between consecutive layers all carry the sign given per layer
/// (+1 or -1); layer sizes must all be >= 1.
SystemPair layer_sign_tree_instance(Rng& rng, const std::vector<int>& layer_sizes,
                                    const std::vector<int>& layer_signs);

/// Single-leader undirected tree of depth <= 2 with m1 depth-1 followers,
/// m2 depth-2 followers, and unconstrained edge signs.
SystemPair depth2_tree_instance(Rng& rng, int m1, int m2);

/// Clustering-balanced instance built to satisfy the cluster-leader
/// criterion: one dedicated leader per follower cluster, a negative arc
/// from it into the cluster, a positive spanning arborescence inside, and
/// no way for a leader to reach any other cluster.
SystemPair cluster_leader_instance(Rng& rng, const std::vector<int>& follower_cluster_sizes,
                                   int extra_leaders);

/// Structurally balanced instance built to satisfy the split-leader
/// criterion: each cluster (sizes >= 2) gets a root leader spanning it
/// positively and a sink leader receiving all negative cross arcs.
SystemPair split_leader_instance(Rng& rng, int n1, int n2);

/// Integer-valued rational vector with entries in [lo, hi].
RationalVector random_integer_vector(Rng& rng, int n, int lo, int hi);

}  // namespace herd
