#pragma once

#include <stdexcept>
#include <string>

namespace schurlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class InvalidIndex : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

class InvalidVariant : public Error {
 public:
  using Error::Error;
};

/// Block dimensions of a colligation do not fit together.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A point lies outside the domain where the structure map is a strict
/// contraction. Carries the offending norm.
class DomainViolation : public Error {
 public:
  DomainViolation(const std::string& what, double norm) : Error(what), norm_(norm) {}
  double norm() const noexcept { return norm_; }

 private:
  double norm_;
};

class ComplexityRefusal : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace schurlab
