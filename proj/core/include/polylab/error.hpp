#pragma once

#include <stdexcept>
#include <string>

namespace polylab {

/// Operands do not fit together: block shapes, algebras, or arities disagree.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented precondition
/// (e.g. a non-hermitian matrix handed to the eigensolver).
class PreconditionError : public std::domain_error {
 public:
  PreconditionError(const std::string& what, double residual)
      : std::domain_error(what), residual_(residual) {}
  explicit PreconditionError(const std::string& what)
      : PreconditionError(what, 0.0) {}

  /// Size of the violation that triggered the error, when one was measured.
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// A function of the spectrum is undefined on the given input.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller asked for something that is not a valid request at all.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mathematically meaningful request that this library does not realize.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed external input (JSON documents, CLI tokens).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polylab
