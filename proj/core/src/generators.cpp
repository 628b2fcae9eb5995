#include "herd/generators.hpp"

#include <algorithm>

#include "herd/errors.hpp"

namespace herd {

int Rng::uniform_int(int lo, int hi) {
  if (lo > hi) throw InvalidInputError("empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

const Rational& Rng::pick(const std::vector<Rational>& pool) {
  if (pool.empty()) throw InvalidInputError("empty value pool");
  return pool[static_cast<size_t>(uniform_int(0, static_cast<int>(pool.size()) - 1))];
}

const std::vector<Rational>& default_weight_pool() {
  static const std::vector<Rational> pool = {Rational(1),  Rational(-1),    Rational(2),
                                             Rational(-2), Rational(3),     Rational(-3),
                                             Rational(1, 2), Rational(-1, 2)};
  return pool;
}

const std::vector<Rational>& positive_weight_pool() {
  static const std::vector<Rational> pool = {Rational(1), Rational(2), Rational(3),
                                             Rational(1, 2)};
  return pool;
}

RationalMatrix random_rational_matrix(Rng& rng, int rows, int cols,
                                      const std::vector<Rational>& pool, int density_percent) {
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (rng.chance(density_percent)) m(i, j) = rng.pick(pool);
    }
  }
  return m;
}

SystemPair random_pair(Rng& rng, int n, int m, const std::vector<Rational>& pool,
                       int density_percent) {
  return SystemPair(random_rational_matrix(rng, n, n, pool, density_percent),
                    random_rational_matrix(rng, n, m, pool, density_percent));
}

RationalMatrix random_nonsingular_matrix(Rng& rng, int n, const std::vector<Rational>& pool) {
  for (int attempt = 0; attempt < 60; ++attempt) {
    RationalMatrix candidate = random_rational_matrix(rng, n, n, pool, 80);
    if (rank(candidate) == n) return candidate;
  }
  RationalMatrix upper = RationalMatrix::identity(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) upper(i, j) = rng.pick(pool);
  }
  return upper;
}

SystemPair block_input_pair(Rng& rng, int n, int r, int m, const std::vector<Rational>& pool) {
  if (r < 1 || r > n || r > m) throw InvalidInputError("need 1 <= r <= min(n, m)");
  RationalMatrix b1(0, 0);
  bool found = false;
  for (int attempt = 0; attempt < 60 && !found; ++attempt) {
    b1 = random_rational_matrix(rng, r, m, pool, 70);
    found = rank(b1) == r;
  }
  if (!found) {
    b1 = RationalMatrix(r, m);
    for (int i = 0; i < r; ++i) b1(i, i) = Rational(1);
    for (int i = 0; i < r; ++i) {
      for (int j = r; j < m; ++j) {
        if (rng.chance(50)) b1(i, j) = rng.pick(pool);
      }
    }
  }
  RationalMatrix b(n, m);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < m; ++j) b(i, j) = b1(i, j);
  }
  return SystemPair(random_rational_matrix(rng, n, n, pool, 60), std::move(b));
}

DiagonalPairInstance diagonal_pair_instance(Rng& rng, int n) {
  if (n < 1) throw InvalidInputError("need n >= 1");
  const int distinct = n == 1 ? 1 : rng.uniform_int(1, n - 1);
  std::vector<Rational> values;
  values.reserve(distinct);
  while (static_cast<int>(values.size()) < distinct) {
    Rational v(rng.uniform_int(-3, 3), rng.chance(30) ? 2 : 1);
    if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
  }
  RationalVector diag(n);
  for (int i = 0; i < n; ++i) diag[i] = values[rng.uniform_int(0, distinct - 1)];
  RationalVector gamma(n);
  for (int i = 0; i < n; ++i) gamma[i] = rng.pick(default_weight_pool());
  return DiagonalPairInstance{RationalMatrix::diagonal(diag), std::move(gamma)};
}

SystemPair layer_sign_tree_instance(Rng& rng, const std::vector<int>& layer_sizes,
                                    const std::vector<int>& layer_signs) {
  if (layer_sizes.size() != layer_signs.size()) {
    throw InvalidInputError("one sign per layer required");
  }
  for (int s : layer_sizes) {
    if (s < 1) throw InvalidInputError("layer sizes must be >= 1");
  }
  for (int s : layer_signs) {
    if (s != 1 && s != -1) throw InvalidInputError("layer signs must be +1 or -1");
  }
  int n = 1;
  for (int s : layer_sizes) n += s;
  RationalMatrix a(n, n);
  int layer_begin = 1;
  int prev_begin = 0;
  int prev_size = 1;
  for (size_t d = 0; d < layer_sizes.size(); ++d) {
    for (int v = layer_begin; v < layer_begin + layer_sizes[d]; ++v) {
      const int parent = rng.uniform_int(prev_begin, prev_begin + prev_size - 1);
      const Rational w = Rational(layer_signs[d]) * rng.pick(positive_weight_pool());
      a(v, parent) = w;
      a(parent, v) = w;
    }
    prev_begin = layer_begin;
    prev_size = layer_sizes[d];
    layer_begin += layer_sizes[d];
  }
  return SystemPair::from_leaders(a, {0});
}

SystemPair depth2_tree_instance(Rng& rng, int m1, int m2) {
  if (m1 < 0 || m2 < 0 || (m2 > 0 && m1 == 0)) {
    throw InvalidInputError("depth-2 followers need at least one depth-1 follower");
  }
  const int n = 1 + m1 + m2;
  RationalMatrix a(n, n);
  for (int i = 1; i <= m1; ++i) {
    const Rational w = rng.pick(default_weight_pool());
    a(i, 0) = w;
    a(0, i) = w;
  }
  for (int v = m1 + 1; v < n; ++v) {
    const int parent = rng.uniform_int(1, m1);
    const Rational w = rng.pick(default_weight_pool());
    a(v, parent) = w;
    a(parent, v) = w;
  }
  return SystemPair::from_leaders(a, {0});
}

SystemPair cluster_leader_instance(Rng& rng, const std::vector<int>& follower_cluster_sizes,
                                   int extra_leaders) {
  if (follower_cluster_sizes.empty()) throw InvalidInputError("need at least one follower cluster");
  for (int s : follower_cluster_sizes) {
    if (s < 1) throw InvalidInputError("cluster sizes must be >= 1");
  }
  if (extra_leaders < 0) throw InvalidInputError("extra_leaders must be >= 0");

  const int m = static_cast<int>(follower_cluster_sizes.size()) + extra_leaders;
  int n = m;
  for (int s : follower_cluster_sizes) n += s;
  RationalMatrix a(n, n);

  int start = m;
  for (size_t p = 0; p < follower_cluster_sizes.size(); ++p) {
    const int leader = static_cast<int>(p);
    const int size = follower_cluster_sizes[p];
    a(start, leader) = -rng.pick(positive_weight_pool());
    for (int v = start + 1; v < start + size; ++v) {
      a(v, rng.uniform_int(start, v - 1)) = rng.pick(positive_weight_pool());
    }
    for (int v = start; v < start + size; ++v) {
      if (rng.chance(30)) a(leader, v) = -rng.pick(positive_weight_pool());
    }
    if (size >= 2) {
      for (int extra = rng.uniform_int(0, size - 1); extra > 0; --extra) {
        const int x = rng.uniform_int(start, start + size - 1);
        int y = rng.uniform_int(start, start + size - 2);
        if (y >= x) ++y;
        a(y, x) = rng.pick(positive_weight_pool());
      }
    }
    start += size;
  }

  std::vector<int> leaders(m);
  for (int i = 0; i < m; ++i) leaders[i] = i;
  return SystemPair::from_leaders(a, leaders);
}

SystemPair split_leader_instance(Rng& rng, int n1, int n2) {
  if (n1 < 2 || n2 < 2) throw InvalidInputError("cluster sizes must be >= 2");
  const int n = n1 + n2;
  RationalMatrix a(n, n);

  // Per cluster: root leader spans the cluster with positive arcs; the sink
  // leader has no outgoing arcs, so negative cross arcs may only point at it.
  const int roots[2] = {0, n1};
  const int sinks[2] = {1, n1 + 1};
  const int begins[2] = {0, n1};
  const int sizes[2] = {n1, n2};
  for (int side = 0; side < 2; ++side) {
    std::vector<int> spine;  // cluster nodes except the sink, in build order
    spine.push_back(roots[side]);
    for (int v = begins[side]; v < begins[side] + sizes[side]; ++v) {
      if (v == roots[side] || v == sinks[side]) continue;
      a(v, spine[static_cast<size_t>(rng.uniform_int(0, static_cast<int>(spine.size()) - 1))]) =
          rng.pick(positive_weight_pool());
      spine.push_back(v);
    }
    a(sinks[side], spine[static_cast<size_t>(rng.uniform_int(0, static_cast<int>(spine.size()) - 1))]) =
        rng.pick(positive_weight_pool());
    for (int extra = rng.uniform_int(0, 2); extra > 0; --extra) {
      const int x = spine[static_cast<size_t>(rng.uniform_int(0, static_cast<int>(spine.size()) - 1))];
      int y = rng.uniform_int(begins[side], begins[side] + sizes[side] - 1);
      if (y == x) continue;
      a(y, x) = rng.pick(positive_weight_pool());
    }
  }
  const int cross_arcs = rng.uniform_int(1, 3);
  for (int c = 0; c < cross_arcs; ++c) {
    const int from_side = rng.uniform_int(0, 1);
    int tail = rng.uniform_int(begins[from_side], begins[from_side] + sizes[from_side] - 1);
    if (tail == sinks[from_side]) tail = roots[from_side];
    a(sinks[1 - from_side], tail) = -rng.pick(positive_weight_pool());
  }
  return SystemPair::from_leaders(a, {roots[0], sinks[0], roots[1], sinks[1]});
}

RationalVector random_integer_vector(Rng& rng, int n, int lo, int hi) {
  RationalVector v(n);
  for (int i = 0; i < n; ++i) v[i] = Rational(rng.uniform_int(lo, hi));
  return v;
}

}  // namespace herd
