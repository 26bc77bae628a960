#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace hred {

// Base for every error raised by the library. Callers that only care about
// "something was wrong with the input" can catch this one.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented invariant or precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Problem too large for the configured dense / enumeration limits.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Energy threshold lands on (or too close to) an eigenvalue.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

// Perturbation too strong relative to the gap for the expansion to apply.
class PerturbationRegimeError : public Error {
 public:
  using Error::Error;
};

// A coupling exceeds the unit scale the compiler expects.
class RescalingRequiredError : public Error {
 public:
  using Error::Error;
};

// Scale schedule cannot meet the requested precision.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& constraint, const std::string& what)
      : Error(what), constraint_(constraint) {}
  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string constraint_;
};

class VerificationError : public Error {
 public:
  VerificationError(double max_deviation, const std::string& what)
      : Error(what), max_deviation_(max_deviation) {}
  double max_deviation() const noexcept { return max_deviation_; }

 private:
  double max_deviation_;
};

// Text-format parse failure; line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string token, const std::string& what)
      : Error("line " + std::to_string(line) + ", token '" + token + "': " + what),
        line_(line),
        token_(std::move(token)) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t line_;
  std::string token_;
};

}  // namespace hred
