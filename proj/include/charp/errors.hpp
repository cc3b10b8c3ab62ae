#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace charp {

/// Root of every error raised by the library. The CLI maps these onto exit
/// codes: ParseError and ArityMismatch are structural, the rest are verdicts.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operands live in different rings (field, variable count or order differ).
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class BadPrime : public Error {
 public:
  BadPrime(std::uint64_t p, const std::string& reason)
      : Error("bad prime " + std::to_string(p) + ": " + reason), prime_(p) {}
  std::uint64_t prime() const { return prime_; }

 private:
  std::uint64_t prime_;
};

class DegenerateGenerator : public Error {
 public:
  DegenerateGenerator(std::uint64_t p, const std::string& what)
      : Error("generator " + what + " degenerates modulo " + std::to_string(p)),
        prime_(p) {}
  std::uint64_t prime() const { return prime_; }

 private:
  std::uint64_t prime_;
};

class DegreeCapExceeded : public Error {
 public:
  using Error::Error;
};

class UnitIdeal : public Error {
 public:
  UnitIdeal() : Error("ideal is the unit ideal") {}
};

class NotContained : public Error {
 public:
  using Error::Error;
};

class ComplexityExceeded : public Error {
 public:
  explicit ComplexityExceeded(unsigned d, const std::string& why)
      : Error("complexity exceeds " + std::to_string(d) + ": " + why), bound_(d) {}
  unsigned bound() const { return bound_; }

 private:
  unsigned bound_;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace charp
