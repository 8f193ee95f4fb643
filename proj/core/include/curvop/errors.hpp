#pragma once

#include <stdexcept>
#include <string>

namespace curvop {

/// Precondition violation on a caller-supplied value.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Iterative solver exhausted its budget before meeting its tolerance.
class NoConvergence : public std::runtime_error {
 public:
  explicit NoConvergence(const std::string& msg) : std::runtime_error(msg) {}
};

/// Root bracket without a sign change.
class BadBracket : public std::invalid_argument {
 public:
  explicit BadBracket(const std::string& msg) : std::invalid_argument(msg) {}
};

/// ODE step produced a state violating the eigenvalue ordering beyond slack.
class IntegrationUnstable : public std::runtime_error {
 public:
  explicit IntegrationUnstable(const std::string& msg) : std::runtime_error(msg) {}
};

/// Quantity requested outside its domain of definition (e.g. S <= 0).
class UndefinedQuantity : public std::runtime_error {
 public:
  explicit UndefinedQuantity(const std::string& msg) : std::runtime_error(msg) {}
};

/// Rejection sampling accepted nothing.
class EmptySample : public std::runtime_error {
 public:
  explicit EmptySample(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two spectra with different total multiplicity were compared.
class ShapeMismatch : public std::runtime_error {
 public:
  explicit ShapeMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace curvop
