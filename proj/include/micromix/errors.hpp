#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace micromix {

// Base for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed configs, bad CLI input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Violated parameter invariants or geometric preconditions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Iterative solver gave up; carries the residual history for post-mortems.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, std::vector<double> residuals)
      : Error(what), residual_history(std::move(residuals)) {}
  std::vector<double> residual_history;
};

}  // namespace micromix
