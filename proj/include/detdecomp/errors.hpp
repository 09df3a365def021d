#ifndef DETDECOMP_ERRORS_HPP
#define DETDECOMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace detdecomp {

// Base of every error thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Problems with a coefficient field or with mixing two of them.
class FieldError : public Error {
public:
  using Error::Error;
};

// The operation divides by 2 and the field has characteristic 2.
class CharTwoError : public FieldError {
public:
  using FieldError::FieldError;
};

// Requested prime-field modulus is composite, 0 or 1.
class NotPrimeError : public FieldError {
public:
  using FieldError::FieldError;
};

// Two operands live in different fields.
class FieldMismatch : public FieldError {
public:
  using FieldError::FieldError;
};

class DivisionByZero : public Error {
public:
  using Error::Error;
};

// Image row is not a bijection of [1, n].
class InvalidPermutation : public Error {
public:
  using Error::Error;
};

// Basis or slot index outside [1, n].
class IndexOutOfRange : public Error {
public:
  using Error::Error;
};

// Two tensors or a tensor/decomposition pair disagree in order.
class OrderMismatch : public Error {
public:
  using Error::Error;
};

// Waring conversion needs n! invertible and the characteristic is <= n.
class CharTooSmall : public Error {
public:
  using Error::Error;
};

// Requested index exceeds the configured computation cap.
class CapExceeded : public Error {
public:
  using Error::Error;
};

// Malformed textual input. line() is 1-based, 0 when unknown.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

// Header term count disagrees with the number of body lines.
class CountMismatch : public ParseError {
public:
  using ParseError::ParseError;
};

}  // namespace detdecomp

#endif
