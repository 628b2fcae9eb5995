#include "herd/leader_design.hpp"

#include <algorithm>

#include "herd/criteria.hpp"
#include "herd/errors.hpp"
#include "herd/system.hpp"

namespace herd {

HerdabilityVerdict herdable_with_leaders(const RationalMatrix& a, const std::vector<int>& leaders) {
  return decide_herdability(SystemPair::from_leaders(a, leaders));
}

namespace {

bool contains_all(const std::vector<int>& sorted_haystack, const std::vector<int>& sorted_needle) {
  return std::includes(sorted_haystack.begin(), sorted_haystack.end(), sorted_needle.begin(),
                       sorted_needle.end());
}

/// Lexicographic successor of a sorted c-subset of [0, n); false when done.
bool next_combination(std::vector<int>& subset, int n) {
  const int c = static_cast<int>(subset.size());
  for (int i = c - 1; i >= 0; --i) {
    if (subset[i] < n - c + i) {
      ++subset[i];
      for (int j = i + 1; j < c; ++j) subset[j] = subset[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

DesignResult minimal_herdable_leader_sets(const RationalMatrix& a, int max_size, bool prune) {
  if (!a.is_square()) throw InvalidInputError("A must be square");
  const int n = a.rows();
  if (max_size < 1 || max_size > n) {
    throw InvalidInputError("max_size must lie in [1, n]");
  }

  DesignResult result;
  result.budget = max_size;
  for (int c = 1; c <= max_size; ++c) {
    std::vector<int> candidate(c);
    for (int i = 0; i < c; ++i) candidate[i] = i;
    do {
      const bool dominated = std::any_of(
          result.minimal_sets.begin(), result.minimal_sets.end(),
          [&](const LeaderSetVerdict& found) { return contains_all(candidate, found.leaders); });
      if (dominated && prune) continue;
      ++result.explored;
      HerdabilityVerdict verdict = herdable_with_leaders(a, candidate);
      if (dominated) {
        // Unpruned mode re-verifies what pruning assumes: supersets of a
        // herdable set stay herdable.
        if (!verdict.herdable) {
          throw InternalError("superset of a herdable leader set is not herdable");
        }
        continue;
      }
      if (verdict.herdable) {
        result.minimal_sets.push_back(LeaderSetVerdict{candidate, std::move(verdict)});
      }
    } while (next_combination(candidate, n));
  }
  return result;
}

}  // namespace herd
