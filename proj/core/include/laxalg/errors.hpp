#pragma once

#include <stdexcept>
#include <string>

namespace lax {

/// Base of every error raised by the library.
class LaxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public LaxError {
 public:
  DivisionByZero() : LaxError("division by zero") {}
};

class SizeMismatch : public LaxError {
 public:
  using LaxError::LaxError;
};

class InsufficientPrecision : public LaxError {
 public:
  using LaxError::LaxError;
};

class MalformedInput : public LaxError {
 public:
  using LaxError::LaxError;
};

class UnsupportedFamily : public LaxError {
 public:
  using LaxError::LaxError;
};

/// The constraint system at the given Tyurin data is not of generic rank.
class DegenerateConfiguration : public LaxError {
 public:
  DegenerateConfiguration(const std::string& what, std::size_t observed_dim)
      : LaxError(what), observed_dim_(observed_dim) {}
  std::size_t observed_dim() const { return observed_dim_; }

 private:
  std::size_t observed_dim_;
};

class WindowTooSmall : public LaxError {
 public:
  using LaxError::LaxError;
};

class NoConnectionFound : public LaxError {
 public:
  using LaxError::LaxError;
};

class RegularityViolation : public LaxError {
 public:
  using LaxError::LaxError;
};

class ParseError : public LaxError {
 public:
  using LaxError::LaxError;
};

class ValidationError : public LaxError {
 public:
  using LaxError::LaxError;
};

}  // namespace lax
