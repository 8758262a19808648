#pragma once

#include <stdexcept>
#include <string>

namespace eurbound {

// All recoverable failures surface as typed exceptions so the CLI can map
// them onto stable exit codes and diagnostics.

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPositive : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotComplete : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConvergenceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidDistribution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotOrthonormal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Unbounded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AbortTooManyVertices : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotBases : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace eurbound
