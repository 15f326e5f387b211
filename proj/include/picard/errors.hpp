#pragma once

#include <stdexcept>
#include <string>

namespace picard {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ring description, unknown symbol, bad coefficient.
class PresentationError : public Error {
 public:
  using Error::Error;
};

/// Operands living in different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A proposed homomorphism does not respect one of the source relations.
class InvalidHomomorphism : public Error {
 public:
  using Error::Error;
};

/// A certificate (Bezout data, membership, cocycle condition, ...) failed to verify.
class CertificateError : public Error {
 public:
  using Error::Error;
};

/// Chart elements whose images in the overlap differ.
class NotASection : public CertificateError {
 public:
  using CertificateError::CertificateError;
};

/// Operation requested outside its precondition (non-UFD layer for gcd, non-unit, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace picard
