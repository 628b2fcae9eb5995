#pragma once

#include <optional>
#include <string>

#include "herd/rational.hpp"

namespace herd {

/// Outcome of a herdability decision, with a machine-checkable certificate.
/// Exactly one certificate is present: a primal u with R u >= 1 entrywise
/// when herdable, otherwise a dual y >= 0, y != 0, with y^T R = 0.
struct HerdabilityVerdict {
  bool herdable = false;
  std::optional<RationalVector> primal_certificate;
  std::optional<RationalVector> dual_certificate;
  std::string method;

  static HerdabilityVerdict yes(RationalVector primal, std::string method);
  static HerdabilityVerdict no(RationalVector dual, std::string method);
};

}  // namespace herd
