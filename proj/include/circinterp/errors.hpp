#pragma once

#include <stdexcept>
#include <string>

namespace circinterp {

// Caller supplied something outside an operation's domain (bad n, ratio, length).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Evaluation at a point where the object is undefined (z = 0 for Laurent polynomials).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A constructed object would break its invariants (non-unimodular or coincident nodes).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Base for failures of a numerical procedure on otherwise valid input.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class MeasureValidityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class MeasureAssumptionViolated : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DegeneracyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SymmetryError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class VariantError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace circinterp
