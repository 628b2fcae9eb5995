#include "herd/synthesis.hpp"

#include <algorithm>

#include "herd/criteria.hpp"
#include "herd/errors.hpp"

namespace herd {

std::vector<RationalVector> simulate(const SystemPair& pair, const RationalVector& x0,
                                     const std::vector<RationalVector>& inputs) {
  const int n = pair.state_dim();
  const int m = pair.input_dim();
  if (static_cast<int>(x0.size()) != n) throw InvalidInputError("x0 length must equal n");
  for (const RationalVector& u : inputs) {
    if (static_cast<int>(u.size()) != m) throw InvalidInputError("input length must equal m");
  }

  std::vector<RationalVector> trajectory;
  trajectory.reserve(inputs.size() + 1);
  trajectory.push_back(x0);
  for (const RationalVector& u : inputs) {
    const RationalVector drift = pair.A * trajectory.back();
    const RationalVector push = pair.B * u;
    RationalVector next(n);
    for (int i = 0; i < n; ++i) next[i] = drift[i] + push[i];
    trajectory.push_back(std::move(next));
  }
  return trajectory;
}

SynthesisOutcome herding_input(const SystemPair& pair, const RationalVector& x0,
                               const Rational& h) {
  if (h.sign() <= 0) throw InvalidInputError("threshold must be positive");
  const int n = pair.state_dim();
  const int m = pair.input_dim();
  if (static_cast<int>(x0.size()) != n) throw InvalidInputError("x0 length must equal n");

  SynthesisOutcome outcome;
  outcome.verdict = decide_herdability(pair);
  if (!outcome.verdict.herdable && !outcome.verdict.dual_certificate) {
    throw InternalError("non-herdable verdict without a dual certificate");
  }
  if (!outcome.verdict.herdable) return outcome;

  const RationalVector& u = *outcome.verdict.primal_certificate;
  const RationalMatrix r = controllability_matrix(pair);
  const RationalVector p = r * u;

  RationalVector drift = x0;
  for (int k = 0; k < n; ++k) drift = pair.A * drift;  // A^n x0

  Rational alpha(0);
  for (int i = 0; i < n; ++i) {
    const Rational needed = (h - drift[i]) / p[i];
    alpha = std::max(alpha, needed);
  }

  HerdingPlan plan;
  plan.horizon = n;
  plan.threshold = h;
  // Column block k of R multiplies A^k B, so block k of u is input u(n-1-k).
  plan.inputs.assign(n, RationalVector(m, Rational(0)));
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < m; ++j) {
      plan.inputs[n - 1 - k][j] = alpha * u[static_cast<size_t>(k) * m + j];
    }
  }
  plan.predicted_final_state.resize(n);
  for (int i = 0; i < n; ++i) plan.predicted_final_state[i] = drift[i] + alpha * p[i];
  for (int i = 0; i < n; ++i) {
    if (plan.predicted_final_state[i] < h) {
      throw InternalError("herding plan misses the threshold");
    }
  }
  outcome.plan = std::move(plan);
  return outcome;
}

}  // namespace herd
