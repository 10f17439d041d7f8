#pragma once

#include <stdexcept>
#include <string>

namespace mdbv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Group parameters that fail their structural or primality checks, or a
// parameter search that ran out of attempts.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class HashToPointError : public Error {
 public:
  using Error::Error;
};

// Malformed wire bytes or text files. Always distinct from a verification
// result: a decode failure never means "signature invalid".
class DecodeError : public Error {
 public:
  DecodeError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class InvalidIdentityError : public Error {
 public:
  using Error::Error;
};

class AggregationError : public Error {
 public:
  using Error::Error;
};

class StateError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Argument outside an operation's domain (n = 0, unknown scheme name, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace mdbv
