#pragma once

#include <stdexcept>
#include <string>

namespace diagcat {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two morphisms or diagrams were combined with incompatible signatures.
class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

// A pairing fails the structural rules (involution, planarity, colors).
class InvalidDiagram : public Error {
 public:
  using Error::Error;
};

// Malformed text input: diagrams, words, scalars, model files, CLI values.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A requested computation exceeds the configured size budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// An operator model failed the certification required for the requested use.
class CertificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace diagcat
