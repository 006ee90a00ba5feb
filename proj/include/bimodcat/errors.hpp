#pragma once

#include <stdexcept>
#include <string>

namespace bimodcat {

/// A simple block of the semisimple quotient is not a split matrix algebra
/// over ℚ, or idempotent discovery would need an extension field.
struct NonSplitError : std::runtime_error {
  explicit NonSplitError(const std::string& what) : std::runtime_error(what) {}
};

struct NotProjectiveError : std::runtime_error {
  explicit NotProjectiveError(const std::string& what)
      : std::runtime_error(what) {}
};

struct NotRigidError : std::runtime_error {
  explicit NotRigidError(const std::string& what) : std::runtime_error(what) {}
};

/// A subcategory closure check failed: some tensor summand is not
/// isomorphic to any generator.
struct NotClosedError : std::runtime_error {
  explicit NotClosedError(const std::string& what)
      : std::runtime_error(what) {}
};

struct NotStableError : std::runtime_error {
  explicit NotStableError(const std::string& what)
      : std::runtime_error(what) {}
};

struct NotNearringError : std::runtime_error {
  explicit NotNearringError(const std::string& what)
      : std::runtime_error(what) {}
};

struct TooLargeError : std::runtime_error {
  explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

struct NotFiniteDimensionalError : std::runtime_error {
  explicit NotFiniteDimensionalError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace bimodcat
