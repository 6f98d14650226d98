#pragma once

#include <stdexcept>
#include <string>

namespace lindiff {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

class BadDerivation : public Error {
 public:
  using Error::Error;
};

class ConfigMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedForPartial : public Error {
 public:
  explicit UnsupportedForPartial(const std::string& operation)
      : Error(operation + " requires a single derivation (m = 1)") {}
};

class ZeroElement : public Error {
 public:
  explicit ZeroElement(const std::string& what) : Error(what) {}
};

class NotAntichain : public Error {
 public:
  using Error::Error;
};

class OrderlyRequired : public Error {
 public:
  explicit OrderlyRequired(const std::string& operation)
      : Error(operation + " requires an orderly ranking") {}
};

}  // namespace lindiff
