#include "doctest.h"

#include "fixtures.hpp"
#include "herd/criteria.hpp"
#include "herd/errors.hpp"
#include "herd/generators.hpp"
#include "herd/positivity.hpp"
#include "herd/reductions.hpp"

using herd::Rational;
using herd::RationalMatrix;
using herd::RationalVector;
using herd::SystemPair;

TEST_CASE("normalize_input leaves selection-form inputs alone") {
  herd::Rng rng(53);
  const auto a = herd::random_rational_matrix(rng, 4, 4, herd::default_weight_pool(), 60);
  RationalMatrix b(4, 2);
  b(0, 0) = b(1, 1) = Rational(1);
  const auto norm = herd::normalize_input(SystemPair(a, b));
  CHECK(norm.pair.A == a);
  CHECK(norm.pair.B == b);
  CHECK(norm.input_transform == RationalMatrix::identity(2));
  CHECK(norm.row_permutation == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("normalize_input rescales a single stretched column") {
  const RationalMatrix a(2, 2);
  RationalMatrix b(2, 1);
  b(0, 0) = Rational(2);
  const auto norm = herd::normalize_input(SystemPair(a, b));
  CHECK(norm.input_transform == RationalMatrix::from_rows({{Rational(1, 2)}}));
  CHECK(norm.row_permutation == std::vector<int>{0, 1});
  CHECK(norm.pair.B(0, 0) == Rational(1));
}

TEST_CASE("normalize_input inverts the leading block") {
  herd::Rng rng(59);
  const auto a = herd::random_rational_matrix(rng, 3, 3, herd::default_weight_pool(), 70);
  const auto b = RationalMatrix::from_rows({{Rational(1), Rational(1)},
                                            {Rational(1), Rational(-1)},
                                            {Rational(0), Rational(0)}});
  const SystemPair pair(a, b);
  const auto norm = herd::normalize_input(pair);
  RationalMatrix expected(3, 2);
  expected(0, 0) = expected(1, 1) = Rational(1);
  CHECK(norm.pair.B == expected);
  CHECK(herd::decide_herdability(pair).herdable == herd::decide_herdability(norm.pair).herdable);

  herd::ReductionTrace trace;
  herd::ReductionStep step;
  step.name = "normalize-input";
  step.input_shape = {3, 2};
  step.output_shape = {3, 2};
  step.input_transform = norm.input_transform;
  step.row_permutation = norm.row_permutation;
  trace.steps.push_back(step);
  const SystemPair replayed = herd::replay_reductions(trace, pair);
  CHECK(replayed.A == norm.pair.A);
  CHECK(replayed.B == norm.pair.B);
}

TEST_CASE("normalize_input rejects degenerate inputs") {
  CHECK_THROWS_AS((void)herd::normalize_input(SystemPair(RationalMatrix(2, 2),
                                                         RationalMatrix(2, 1))),
                  herd::NotNormalizableError);
  const auto dependent = RationalMatrix::from_rows({{Rational(1), Rational(2)},
                                                    {Rational(2), Rational(4)},
                                                    {Rational(0), Rational(0)}});
  CHECK_THROWS_AS((void)herd::normalize_input(SystemPair(RationalMatrix(3, 3), dependent)),
                  herd::NotNormalizableError);
}

TEST_CASE("leader block reduction peels the leader rows") {
  // Star: reduced pair is (0, w).
  const auto star = fixtures::star_pair({Rational(1), Rational(-2), Rational(3)});
  const SystemPair reduced = herd::leader_block_reduction(star);
  CHECK(reduced.A == RationalMatrix(3, 3));
  CHECK(reduced.B == RationalMatrix::from_rows({{Rational(1)}, {Rational(-2)}, {Rational(3)}}));

  // Full leader set reduces to the empty pair, herdable by convention.
  const SystemPair everything(RationalMatrix::identity(3), RationalMatrix::identity(3));
  const SystemPair empty = herd::leader_block_reduction(everything);
  CHECK(empty.state_dim() == 0);
  const auto verdict = herd::decide_herdability(empty);
  CHECK(verdict.herdable);
  CHECK(verdict.method == "empty-state");

  const auto network = fixtures::depth2_pair(Rational(5), Rational(1), Rational(1));
  const SystemPair peeled = herd::leader_block_reduction(network);
  CHECK(peeled.state_dim() == 5);
  CHECK(peeled.B.col(0) ==
        RationalVector{Rational(1), Rational(5), Rational(2), Rational(0), Rational(0)});

  RationalMatrix scattered(3, 1);
  scattered(2, 0) = Rational(1);
  CHECK_THROWS_AS((void)herd::leader_block_reduction(SystemPair(RationalMatrix(3, 3), scattered)),
                  herd::InvalidInputError);
}

TEST_CASE("diagonal pair characterization") {
  const auto distinct = herd::diagonal_pair_herdability(
      RationalMatrix::diagonal({Rational(1), Rational(2)}), {Rational(1), Rational(-1)});
  CHECK(distinct.herdable);
  CHECK(distinct.method == "diagonal-pair");

  const auto clash = herd::diagonal_pair_herdability(
      RationalMatrix::diagonal({Rational(1), Rational(1)}), {Rational(1), Rational(-1)});
  CHECK_FALSE(clash.herdable);
  REQUIRE(clash.dual_certificate.has_value());
  CHECK((*clash.dual_certificate)[0] == (*clash.dual_certificate)[1]);
  CHECK((*clash.dual_certificate)[0] > Rational(0));

  const auto agreeing = herd::diagonal_pair_herdability(
      RationalMatrix::diagonal({Rational(3), Rational(3)}), {Rational(2), Rational(5)});
  CHECK(agreeing.herdable);

  CHECK_THROWS_AS((void)herd::diagonal_pair_herdability(
                      RationalMatrix::diagonal({Rational(1), Rational(2)}),
                      {Rational(1), Rational(0)}),
                  herd::InvalidInputError);
  CHECK_THROWS_AS((void)herd::diagonal_pair_herdability(
                      RationalMatrix::from_rows({{Rational(1), Rational(1)},
                                                 {Rational(0), Rational(1)}}),
                      {Rational(1), Rational(1)}),
                  herd::InvalidInputError);
}

TEST_CASE("certificates from the diagonal characterization verify") {
  herd::Rng rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.uniform_int(1, 7);
    const auto instance = herd::diagonal_pair_instance(rng, n);
    const SystemPair pair(instance.lambda, RationalMatrix::column(instance.gamma));
    const auto from_structure = herd::diagonal_pair_herdability(instance.lambda, instance.gamma);
    const auto direct = herd::decide_herdability(pair);
    CHECK(from_structure.herdable == direct.herdable);
    const RationalMatrix r = herd::controllability_matrix(pair);
    if (from_structure.herdable) {
      REQUIRE(from_structure.primal_certificate.has_value());
      CHECK(herd::verify_primal_certificate(r, *from_structure.primal_certificate));
    } else {
      REQUIRE(from_structure.dual_certificate.has_value());
      CHECK(herd::verify_dual_certificate(r, *from_structure.dual_certificate));
      CHECK(herd::is_unisigned(*from_structure.dual_certificate));
    }
  }
}

TEST_CASE("reductions preserve the verdict on random block pairs") {
  herd::Rng rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform_int(1, 6);
    const int r = rng.uniform_int(1, n);
    const int m = rng.uniform_int(r, r + 1);
    const SystemPair pair = herd::block_input_pair(rng, n, r, m, herd::default_weight_pool());
    const bool direct = herd::decide_herdability(pair).herdable;
    CHECK(herd::decide_herdability(herd::leader_block_reduction(pair)).herdable == direct);
    const auto norm = herd::normalize_input(pair);
    CHECK(herd::decide_herdability(norm.pair).herdable == direct);
  }
}

TEST_CASE("input transforms preserve the controllability image") {
  herd::Rng rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform_int(1, 6);
    const int m = rng.uniform_int(1, 3);
    const SystemPair pair = herd::random_pair(rng, n, m, herd::default_weight_pool(), 60);
    const RationalMatrix t = herd::random_nonsingular_matrix(rng, m, herd::default_weight_pool());
    const SystemPair transformed(pair.A, pair.B * t);
    CHECK(herd::decide_herdability(pair).herdable ==
          herd::decide_herdability(transformed).herdable);

    const RationalMatrix r1 = herd::controllability_matrix(pair);
    const RationalMatrix r2 = herd::controllability_matrix(transformed);
    const int rank1 = herd::rank(r1);
    CHECK(rank1 == herd::rank(r2));
    CHECK(rank1 == herd::rank(herd::hstack(r1, r2)));
  }
}

TEST_CASE("verdicts are invariant under state permutations") {
  herd::Rng rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.uniform_int(1, 6);
    const int m = rng.uniform_int(1, 2);
    const SystemPair pair = herd::random_pair(rng, n, m, herd::default_weight_pool(), 60);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_int(0, i)]);
    const RationalMatrix p = herd::permutation_matrix(perm);
    const SystemPair permuted(p * pair.A * p.transpose(), p * pair.B);
    CHECK(herd::decide_herdability(pair).herdable ==
          herd::decide_herdability(permuted).herdable);
  }
}
