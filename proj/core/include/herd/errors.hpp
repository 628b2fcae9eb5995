#pragma once

#include <stdexcept>
#include <string>

namespace herd {

/// Malformed or dimensionally inconsistent input.
class InvalidInputError : public std::invalid_argument {
public:
  explicit InvalidInputError(const std::string& what) : std::invalid_argument(what) {}
};

/// The nonzero rows of B are linearly dependent, so no input transform can
/// bring it to selection form. Callers fall back to the direct check.
class NotNormalizableError : public std::runtime_error {
public:
  explicit NotNormalizableError(const std::string& what) : std::runtime_error(what) {}
};

/// A structural invariant the library relies on was violated internally.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace herd
