#pragma once

#include <optional>
#include <vector>

#include "herd/rational.hpp"
#include "herd/system.hpp"
#include "herd/verdict.hpp"

namespace herd {

/// Explicit open-loop input schedule driving every state component to at
/// least the threshold at the final step, exactly.
struct HerdingPlan {
  int horizon = 0;                     // t_f
  std::vector<RationalVector> inputs;  // u(0), ..., u(t_f - 1), each length m
  Rational threshold;                  // h > 0
  RationalVector predicted_final_state;
};

/// Exact trajectory x(0), ..., x(T) of x(t+1) = A x(t) + B u(t).
std::vector<RationalVector> simulate(const SystemPair& pair, const RationalVector& x0,
                                     const std::vector<RationalVector>& inputs);

/// Either a plan (herdable) or the dual certificate (not herdable), never
/// both. verdict keeps the underlying decision and its primal/dual data.
struct SynthesisOutcome {
  std::optional<HerdingPlan> plan;
  HerdabilityVerdict verdict;
};

/// Horizon is fixed at t_f = n. From a primal certificate u with
/// R u = p >= 1, the scale alpha = max(0, max_i (h - [A^n x0]_i) / [p]_i)
/// stacks into inputs [u(n-1); ...; u(0)] = alpha * u, giving
/// x(n) = A^n x0 + alpha * p >= h * 1 exactly. Throws on h <= 0 or a
/// mismatched x0.
SynthesisOutcome herding_input(const SystemPair& pair, const RationalVector& x0,
                               const Rational& h);

}  // namespace herd
