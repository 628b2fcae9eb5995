#pragma once

#include "herd/matrix.hpp"
#include "herd/system.hpp"

namespace fixtures {

// Six-node symmetric network: node 0 tied to 1 (weight 1), 2 (weight a),
// 3 (weight 2); node 2 tied to 4 (weight b) and 5 (weight c). With leader 0
// it is an undirected tree of depth 2, herdable exactly when b*c > 0.
inline herd::RationalMatrix depth2_network(const herd::Rational& a, const herd::Rational& b,
                                           const herd::Rational& c) {
  herd::RationalMatrix m(6, 6);
  m(0, 1) = m(1, 0) = herd::Rational(1);
  m(0, 2) = m(2, 0) = a;
  m(0, 3) = m(3, 0) = herd::Rational(2);
  m(2, 4) = m(4, 2) = b;
  m(2, 5) = m(5, 2) = c;
  return m;
}

inline herd::SystemPair depth2_pair(const herd::Rational& a, const herd::Rational& b,
                                    const herd::Rational& c) {
  return herd::SystemPair::from_leaders(depth2_network(a, b, c), {0});
}

// Star with the leader at node 0 and one weighted edge per leaf.
inline herd::RationalMatrix star_matrix(const herd::RationalVector& leaf_weights) {
  const int n = 1 + static_cast<int>(leaf_weights.size());
  herd::RationalMatrix m(n, n);
  for (int leaf = 1; leaf < n; ++leaf) {
    m(0, leaf) = m(leaf, 0) = leaf_weights[leaf - 1];
  }
  return m;
}

inline herd::SystemPair star_pair(const herd::RationalVector& leaf_weights) {
  return herd::SystemPair::from_leaders(star_matrix(leaf_weights), {0});
}

}  // namespace fixtures
