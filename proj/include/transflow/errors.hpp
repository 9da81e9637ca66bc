#ifndef TRANSFLOW_ERRORS_HPP
#define TRANSFLOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace transflow {

// Nodal determinant fell below the floor, or the metric lost positive
// definiteness. The flow engine treats this as blow-up.
struct SingularMetric : std::runtime_error {
  explicit SingularMetric(const std::string& what) : std::runtime_error(what) {}
};

struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an operation requires the exact (kappa_harmonic = 0) mode.
struct ModeUnsupported : std::runtime_error {
  explicit ModeUnsupported(const std::string& what) : std::runtime_error(what) {}
};

// Conjugate-heat solution lost positivity.
struct NonPositive : std::runtime_error {
  explicit NonPositive(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownScenario : std::runtime_error {
  explicit UnknownScenario(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidConfig : std::runtime_error {
  explicit InvalidConfig(const std::string& what) : std::runtime_error(what) {}
};

struct CheckpointError : std::runtime_error {
  explicit CheckpointError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace transflow

#endif
