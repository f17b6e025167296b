#pragma once

#include <stdexcept>
#include <string>

namespace homakivis {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Exact elimination found a singular matrix.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

class SkewSymmetryViolation : public Error {
 public:
  using Error::Error;
};

class NoUnit : public Error {
 public:
  using Error::Error;
};

class NotInvertibleElement : public Error {
 public:
  using Error::Error;
};

class NotInNucleus : public Error {
 public:
  using Error::Error;
};

class ZeroParameter : public Error {
 public:
  using Error::Error;
};

class InfeasibleOrder : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (text scalars, files). `field` names the
/// offending location, e.g. "bilinear[3].k".
class InputError : public Error {
 public:
  InputError(std::string field, const std::string& message)
      : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)), message_(message) {}

  const std::string& field() const noexcept { return field_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string field_;
  std::string message_;
};

}  // namespace homakivis
