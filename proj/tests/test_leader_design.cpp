#include <algorithm>

#include "doctest.h"

#include "fixtures.hpp"
#include "herd/errors.hpp"
#include "herd/generators.hpp"
#include "herd/leader_design.hpp"
#include "herd/positivity.hpp"
#include "herd/system.hpp"

using herd::Rational;
using herd::RationalMatrix;
using herd::SystemPair;

namespace {

bool sets_equal(const herd::DesignResult& lhs, const herd::DesignResult& rhs) {
  if (lhs.minimal_sets.size() != rhs.minimal_sets.size()) return false;
  for (size_t i = 0; i < lhs.minimal_sets.size(); ++i) {
    if (lhs.minimal_sets[i].leaders != rhs.minimal_sets[i].leaders) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("identity dynamics need one leader per node") {
  const auto a = RationalMatrix::identity(2);
  CHECK_FALSE(herd::herdable_with_leaders(a, {0}).herdable);
  CHECK(herd::herdable_with_leaders(a, {0, 1}).herdable);

  const auto tight = herd::minimal_herdable_leader_sets(a, 1);
  CHECK(tight.minimal_sets.empty());
  CHECK(tight.explored == 2);
  CHECK(tight.budget == 1);

  const auto full = herd::minimal_herdable_leader_sets(a, 2);
  REQUIRE(full.minimal_sets.size() == 1);
  CHECK(full.minimal_sets[0].leaders == std::vector<int>{0, 1});
  CHECK(full.explored == 3);
}

TEST_CASE("every node of the herdable network is a minimal singleton") {
  const auto a = fixtures::depth2_network(Rational(1), Rational(1), Rational(1));
  const auto result = herd::minimal_herdable_leader_sets(a, 1);
  REQUIRE(result.minimal_sets.size() == 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(result.minimal_sets[i].leaders == std::vector<int>{i});
    CHECK(result.minimal_sets[i].verdict.herdable);
  }
}

TEST_CASE("mixed-sign star skips its center") {
  const auto a = fixtures::star_matrix({Rational(1), Rational(-1)});
  const auto result = herd::minimal_herdable_leader_sets(a, 2);
  CHECK_FALSE(herd::herdable_with_leaders(a, {0}).herdable);
  REQUIRE(!result.minimal_sets.empty());
  for (const auto& entry : result.minimal_sets) {
    CHECK(entry.leaders != std::vector<int>{0});
  }
}

TEST_CASE("results come in canonical order with verified certificates") {
  herd::Rng rng(401);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = rng.uniform_int(2, 5);
    const auto a = herd::random_rational_matrix(rng, n, n, herd::default_weight_pool(), 55);
    const int budget = rng.uniform_int(1, n);
    const auto result = herd::minimal_herdable_leader_sets(a, budget);

    for (size_t i = 1; i < result.minimal_sets.size(); ++i) {
      const auto& prev = result.minimal_sets[i - 1].leaders;
      const auto& cur = result.minimal_sets[i].leaders;
      const bool ordered = prev.size() < cur.size() ||
                           (prev.size() == cur.size() &&
                            std::lexicographical_compare(prev.begin(), prev.end(), cur.begin(),
                                                         cur.end()));
      CHECK(ordered);
    }

    for (const auto& entry : result.minimal_sets) {
      REQUIRE(entry.verdict.herdable);
      REQUIRE(entry.verdict.primal_certificate.has_value());
      const auto pair = SystemPair::from_leaders(a, entry.leaders);
      CHECK(herd::verify_primal_certificate(herd::controllability_matrix(pair),
                                            *entry.verdict.primal_certificate));

      // Minimality: dropping any single leader loses herdability.
      for (size_t drop = 0; drop < entry.leaders.size(); ++drop) {
        auto reduced = entry.leaders;
        reduced.erase(reduced.begin() + static_cast<long>(drop));
        if (reduced.empty()) continue;
        CHECK_FALSE(herd::herdable_with_leaders(a, reduced).herdable);
      }

      // No reported set contains another.
      for (const auto& other : result.minimal_sets) {
        if (&other == &entry) continue;
        CHECK_FALSE(std::includes(entry.leaders.begin(), entry.leaders.end(),
                                  other.leaders.begin(), other.leaders.end()));
      }
    }
  }
}

TEST_CASE("pruning never changes the reported family") {
  herd::Rng rng(409);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = rng.uniform_int(2, 5);
    const auto a = herd::random_rational_matrix(rng, n, n, herd::default_weight_pool(), 50);
    const auto pruned = herd::minimal_herdable_leader_sets(a, n, true);
    const auto unpruned = herd::minimal_herdable_leader_sets(a, n, false);
    CHECK(sets_equal(pruned, unpruned));
    CHECK(pruned.explored <= unpruned.explored);
  }
}

TEST_CASE("budget validation") {
  const auto a = RationalMatrix::identity(3);
  CHECK_THROWS_AS((void)herd::minimal_herdable_leader_sets(a, 0), herd::InvalidInputError);
  CHECK_THROWS_AS((void)herd::minimal_herdable_leader_sets(a, 4), herd::InvalidInputError);
  CHECK_THROWS_AS((void)herd::minimal_herdable_leader_sets(RationalMatrix(2, 3), 1),
                  herd::InvalidInputError);
}
