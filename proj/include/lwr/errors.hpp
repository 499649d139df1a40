#pragma once

#include <stdexcept>
#include <string>

namespace lwr {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An objective keeps descending past the bracket-expansion cap.
class UnboundedBelowError : public Error {
 public:
  using Error::Error;
};

// Non-positive or non-finite tolerance passed to a solver.
class InvalidToleranceError : public Error {
 public:
  using Error::Error;
};

// No scenario pair reproduces the full-set solution within tolerance.
class CertificateError : public Error {
 public:
  using Error::Error;
};

// Arguments outside an operation's domain (bad interval, bad ids, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A requested quantity does not exist for the given inputs.
class NoSolutionError : public Error {
 public:
  using Error::Error;
};

// Vector lengths disagree with the scenario count.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Invalid generator or study configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed input document; message carries the field path.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace lwr
