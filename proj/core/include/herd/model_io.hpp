#pragma once

#include <string>

#include "herd/system.hpp"

namespace herd {

/// Parses a JSON model into an exact pair. Format:
///   {"n": 3, "A": [[0, "1/2", 0], ...],
///    "B": {"leaders": [1, 3]} or {"matrix": [[...], ...]},
///    "metadata": {"name": ..., "description": ...}}   (optional)
/// Rational entries are integers or "p/q" strings with q > 0; decimal or
/// exponent notation is rejected. Leader indices are 1-based and strictly
/// increasing in files; the returned pair uses 0-based indices. Problems
/// throw InvalidInputError naming the offending field.
SystemPair parse_model(const std::string& text);

/// parse_model plus the optional metadata name (empty when absent).
struct ParsedModel {
  SystemPair pair;
  std::string name;
};
ParsedModel parse_model_file(const std::string& text);

/// Parses a JSON array of rationals, e.g. [0, "1/2", -5].
/// Same entry rules as model matrices. Throws InvalidInputError.
RationalVector parse_rational_vector(const std::string& text);

/// Serializes a pair in the model format: leaders form when B is a
/// selection matrix, matrix form otherwise. Deterministic output.
std::string model_to_json(const SystemPair& pair, const std::string& name);

}  // namespace herd
