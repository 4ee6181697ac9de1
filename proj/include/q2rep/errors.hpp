#pragma once

#include <stdexcept>
#include <string>

namespace q2 {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two ExtScalars (or containers of them) built over different p.
class ExtensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Division by an element of zero norm.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// A differential operator's image left the declared polynomial space.
class CapViolation : public Error {
 public:
  using Error::Error;
};

/// A basis map passed to to_matrix is linearly dependent.
class SingularBasis : public Error {
 public:
  using Error::Error;
};

/// Model parameters violate a required constraint (e.g. JC detuning).
class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

/// An exact identity that should hold did not (e.g. a non-scalar Casimir).
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

class NoClosedForm : public Error {
 public:
  using Error::Error;
};

class SolverError : public Error {
 public:
  using Error::Error;
};

/// The sphaleron reduction produced non-polynomial coefficients.
class DerivationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace q2
