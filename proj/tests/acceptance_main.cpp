// Acceptance battery: one pass/fail line per criterion, exit code equal to
// the number of failed criteria. All arithmetic is exact; the only pinned
// tolerance is the wall-clock budget of criterion 1.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "herd/criteria.hpp"
#include "herd/generators.hpp"
#include "herd/leader_design.hpp"
#include "herd/positivity.hpp"
#include "herd/reductions.hpp"
#include "herd/synthesis.hpp"
#include "herd/system.hpp"

namespace {

using herd::Rational;
using herd::RationalMatrix;
using herd::RationalVector;
using herd::Rng;
using herd::SystemPair;

constexpr double kSweepTimeBudgetSeconds = 10.0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome six_node_parameter_sweep() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<int> values = {-3, -2, -1, 1, 2, 3};
  int cases = 0, agree = 0;
  for (int a : values) {
    for (int b : values) {
      for (int c : values) {
        ++cases;
        const auto pair = fixtures::depth2_pair(Rational(a), Rational(b), Rational(c));
        const bool expected = b * c > 0;
        if (herd::decide_herdability(pair).herdable == expected) ++agree;
      }
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                             .count();
  std::ostringstream detail;
  detail << agree << "/" << cases << " verdicts match bc > 0, " << seconds << "s (budget "
         << kSweepTimeBudgetSeconds << "s)";
  return {agree == cases && cases == 216 && seconds < kSweepTimeBudgetSeconds, detail.str()};
}

Outcome depth1_exactness() {
  int cases = 0, agree = 0;
  for (int leaves = 2; leaves <= 6; ++leaves) {
    for (int mask = 0; mask < (1 << leaves); ++mask) {
      ++cases;
      std::vector<Rational> weights;
      for (int i = 0; i < leaves; ++i) {
        weights.emplace_back((mask >> i) & 1 ? 1 : -1);
      }
      const auto pair = fixtures::star_pair(weights);
      const auto report = herd::check_tree_depth1_criterion(pair);
      if (report.hypotheses_hold &&
          *report.implied_herdable == herd::decide_herdability(pair).herdable) {
        ++agree;
      }
    }
  }
  std::ostringstream detail;
  detail << agree << "/" << cases << " sign patterns agree with the direct verdict";
  return {agree == cases && cases == 124, detail.str()};
}

Outcome depth2_exactness() {
  Rng rng(1001);
  int agree = 0;
  const int kCases = 500;
  for (int i = 0; i < kCases; ++i) {
    const int m1 = rng.uniform_int(1, 4);
    const int m2 = rng.uniform_int(1, 8 - m1);
    const auto pair = herd::depth2_tree_instance(rng, m1, m2);
    const auto report = herd::check_tree_depth2_criterion(pair);
    if (report.hypotheses_hold &&
        *report.implied_herdable == herd::decide_herdability(pair).herdable) {
      ++agree;
    }
  }
  std::ostringstream detail;
  detail << agree << "/" << kCases << " random depth-2 trees agree with the direct verdict";
  return {agree == kCases, detail.str()};
}

Outcome diagonal_exactness() {
  Rng rng(1003);
  int agree = 0;
  const int kCases = 500;
  for (int i = 0; i < kCases; ++i) {
    const int n = rng.uniform_int(2, 7);
    const auto instance = herd::diagonal_pair_instance(rng, n);
    RationalMatrix b(n, 1);
    for (int r = 0; r < n; ++r) b(r, 0) = instance.gamma[r];
    const SystemPair pair(instance.lambda, b);
    const auto structured = herd::diagonal_pair_herdability(instance.lambda, instance.gamma);
    const auto direct = herd::decide_herdability(pair);
    if (structured.herdable != direct.herdable) continue;
    const auto reach = herd::controllability_matrix(pair);
    if (structured.herdable) {
      if (!structured.primal_certificate ||
          !herd::verify_primal_certificate(reach, *structured.primal_certificate)) {
        continue;
      }
    } else {
      if (!structured.dual_certificate ||
          !herd::verify_dual_certificate(reach, *structured.dual_certificate) ||
          !herd::is_unisigned(*structured.dual_certificate)) {
        continue;
      }
    }
    ++agree;
  }
  std::ostringstream detail;
  detail << agree << "/" << kCases
         << " diagonal pairs match the direct verdict with verified certificates";
  return {agree == kCases, detail.str()};
}

Outcome reduction_equivalence() {
  Rng rng(1005);
  int block_agree = 0, transform_agree = 0;
  const int kCases = 300;
  for (int i = 0; i < kCases; ++i) {
    const int n = rng.uniform_int(1, 6);
    const int r = rng.uniform_int(1, n);
    const int m = rng.uniform_int(r, r + 1);
    const auto pair = herd::block_input_pair(rng, n, r, m, herd::default_weight_pool());
    const bool original = herd::decide_herdability(pair).herdable;
    const auto normalized = herd::normalize_input(pair);
    const bool after_normalize = herd::decide_herdability(normalized.pair).herdable;
    const bool after_block =
        herd::decide_herdability(herd::leader_block_reduction(normalized.pair)).herdable;
    if (original == after_normalize && original == after_block) ++block_agree;
  }
  for (int i = 0; i < kCases; ++i) {
    const int n = rng.uniform_int(1, 5);
    const int m = rng.uniform_int(1, 3);
    const auto pair = herd::random_pair(rng, n, m, herd::default_weight_pool(), 60);
    const auto t = herd::random_nonsingular_matrix(rng, m, herd::default_weight_pool());
    const SystemPair transformed(pair.A, pair.B * t);
    if (herd::decide_herdability(pair).herdable ==
        herd::decide_herdability(transformed).herdable) {
      ++transform_agree;
    }
  }
  std::ostringstream detail;
  detail << block_agree << "/" << kCases << " block reductions and " << transform_agree << "/"
         << kCases << " input transforms preserve the verdict";
  return {block_agree == kCases && transform_agree == kCases, detail.str()};
}

Outcome sufficient_criteria_soundness() {
  Rng rng(1007);
  const int kCases = 200;
  int cluster_sound = 0, split_sound = 0, layer_sound = 0;
  for (int i = 0; i < kCases; ++i) {
    std::vector<int> sizes(rng.uniform_int(1, 3));
    for (int& s : sizes) s = rng.uniform_int(1, 3);
    const auto pair = herd::cluster_leader_instance(rng, sizes, rng.uniform_int(0, 1));
    if (herd::check_cluster_leader_criterion(pair).hypotheses_hold &&
        herd::decide_herdability(pair).herdable) {
      ++cluster_sound;
    }
  }
  for (int i = 0; i < kCases; ++i) {
    const auto pair = herd::split_leader_instance(rng, rng.uniform_int(2, 4),
                                                  rng.uniform_int(2, 4));
    if (herd::check_split_leader_criterion(pair).hypotheses_hold &&
        herd::decide_herdability(pair).herdable) {
      ++split_sound;
    }
  }
  for (int i = 0; i < kCases; ++i) {
    std::vector<int> sizes(rng.uniform_int(1, 3));
    std::vector<int> signs(sizes.size());
    for (int& s : sizes) s = rng.uniform_int(1, 3);
    for (int& s : signs) s = rng.chance(50) ? 1 : -1;
    const auto pair = herd::layer_sign_tree_instance(rng, sizes, signs);
    if (herd::check_tree_layer_sign_criterion(pair).hypotheses_hold &&
        herd::decide_herdability(pair).herdable) {
      ++layer_sound;
    }
  }
  std::ostringstream detail;
  detail << "cluster-leader " << cluster_sound << "/" << kCases << ", split-leader " << split_sound
         << "/" << kCases << ", tree-layer-sign " << layer_sound << "/" << kCases
         << " hypotheses imply herdability";
  return {cluster_sound == kCases && split_sound == kCases && layer_sound == kCases,
          detail.str()};
}

Outcome certificate_alternative() {
  Rng rng(1009);
  int clean = 0;
  const int kCases = 500;
  for (int i = 0; i < kCases; ++i) {
    const int rows = rng.uniform_int(1, 7);
    const int cols = rng.uniform_int(1, 7);
    const auto m = herd::random_rational_matrix(rng, rows, cols, herd::default_weight_pool(),
                                                rng.uniform_int(30, 90));
    const auto verdict = herd::strictly_positive_in_image(m);
    const bool has_primal = verdict.primal_certificate.has_value();
    const bool has_dual = verdict.dual_certificate.has_value();
    if (has_primal == has_dual) continue;
    if (verdict.herdable != has_primal) continue;
    if (has_primal && !herd::verify_primal_certificate(m, *verdict.primal_certificate)) continue;
    if (has_dual && !herd::verify_dual_certificate(m, *verdict.dual_certificate)) continue;
    ++clean;
  }
  std::ostringstream detail;
  detail << clean << "/" << kCases << " matrices yield exactly one certificate that re-verifies";
  return {clean == kCases, detail.str()};
}

Outcome synthesis_round_trip() {
  Rng rng(1011);
  const int kTarget = 100;
  int planned = 0, exact = 0, attempts = 0;
  while (planned < kTarget && attempts < 2000) {
    ++attempts;
    const int n = rng.uniform_int(1, 6);
    const int m = rng.uniform_int(1, 2);
    const SystemPair pair = herd::random_pair(rng, n, m, herd::default_weight_pool(), 60);
    const RationalVector x0 = herd::random_integer_vector(rng, n, -10, 10);
    const auto outcome = herd::herding_input(pair, x0, Rational(1));
    if (!outcome.plan) continue;
    ++planned;
    const auto trajectory = herd::simulate(pair, x0, outcome.plan->inputs);
    const RationalVector& final_state = trajectory.back();
    bool ok = final_state == outcome.plan->predicted_final_state;
    for (const Rational& x : final_state) {
      if (x < Rational(1)) ok = false;
    }
    if (ok) ++exact;
  }
  std::ostringstream detail;
  detail << exact << "/" << planned << " plans reach >= 1 entrywise exactly (target " << kTarget
         << " herdable instances)";
  return {planned == kTarget && exact == kTarget, detail.str()};
}

Outcome leader_design_minimality() {
  const auto star = fixtures::star_matrix({Rational(1), Rational(1), Rational(1)});
  const auto network = fixtures::depth2_network(Rational(1), Rational(1), Rational(1));
  const auto contains_center = [](const herd::DesignResult& result) {
    for (const auto& entry : result.minimal_sets) {
      if (entry.leaders == std::vector<int>{0}) return true;
    }
    return false;
  };
  const bool star_ok = contains_center(herd::minimal_herdable_leader_sets(star, 2));
  const bool network_ok = contains_center(herd::minimal_herdable_leader_sets(network, 2));

  Rng rng(1013);
  int prune_agree = 0;
  const int kCases = 10;
  for (int i = 0; i < kCases; ++i) {
    const int n = rng.uniform_int(2, 6);
    const auto a = herd::random_rational_matrix(rng, n, n, herd::default_weight_pool(), 50);
    const auto pruned = herd::minimal_herdable_leader_sets(a, n, true);
    const auto unpruned = herd::minimal_herdable_leader_sets(a, n, false);
    bool same = pruned.minimal_sets.size() == unpruned.minimal_sets.size();
    for (size_t s = 0; same && s < pruned.minimal_sets.size(); ++s) {
      same = pruned.minimal_sets[s].leaders == unpruned.minimal_sets[s].leaders;
    }
    if (same) ++prune_agree;
  }
  std::ostringstream detail;
  detail << "node 1 minimal on the star: " << (star_ok ? "yes" : "no")
         << ", on the six-node network: " << (network_ok ? "yes" : "no") << "; " << prune_agree
         << "/" << kCases << " pruned enumerations match unpruned";
  return {star_ok && network_ok && prune_agree == kCases, detail.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"six-node parameter sweep", six_node_parameter_sweep},
      {"depth-1 star exactness", depth1_exactness},
      {"depth-2 tree exactness", depth2_exactness},
      {"diagonal pair exactness", diagonal_exactness},
      {"reduction equivalence", reduction_equivalence},
      {"sufficient criteria soundness", sufficient_criteria_soundness},
      {"certificate alternative", certificate_alternative},
      {"synthesis round trip", synthesis_round_trip},
      {"leader design minimality", leader_design_minimality},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const Outcome outcome = criteria[i].second();
    if (!outcome.pass) ++failures;
    std::printf("criterion %zu (%s): %s - %s\n", i + 1, criteria[i].first.c_str(),
                outcome.pass ? "PASS" : "FAIL", outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
