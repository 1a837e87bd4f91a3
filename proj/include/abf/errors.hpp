#pragma once

#include <stdexcept>
#include <string>

namespace abf {

/// Process exit codes shared by the CLI and its tests.
enum class ExitCode : int {
  ok = 0,
  usage = 2,           // bad arguments or unparsable input files
  regime = 3,          // unsupported regime / infeasible problem
  no_convergence = 4,  // an iterative routine failed to reach tolerance
};

class InvalidArgumentError : public std::invalid_argument {
 public:
  explicit InvalidArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// The requested parameters fall outside the validity region of the
/// closed-form solution being evaluated.
class RegimeError : public std::runtime_error {
 public:
  explicit RegimeError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Flat in-band gain is unbounded at broadside; the supremum is not attained.
class DivergentGainError : public RegimeError {
 public:
  explicit DivergentGainError(const std::string& msg) : RegimeError(msg) {}
};

/// No feasible allocation exists (zero gain toward the target, empty spectrum).
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace abf
