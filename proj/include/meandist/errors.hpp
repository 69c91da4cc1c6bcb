#pragma once

#include <stdexcept>
#include <string>

namespace meandist {

// Bad parameters or malformed input (exit code 2 at the CLI).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An operation was asked of a space variant that does not support it.
class UnsupportedVariant : public InputError {
 public:
  explicit UnsupportedVariant(const std::string& what) : InputError(what) {}
};

// Inputs are valid but outside the regime where a formula is meaningful.
class PreconditionError : public InputError {
 public:
  explicit PreconditionError(const std::string& what) : InputError(what) {}
};

// Mesh rejected: non-manifold, degenerate, disconnected or unparsable.
class MeshError : public InputError {
 public:
  explicit MeshError(const std::string& what) : InputError(what) {}
};

// Work would exceed a declared size budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace meandist
