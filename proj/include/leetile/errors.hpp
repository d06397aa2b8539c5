#pragma once

#include <stdexcept>
#include <string>

namespace leetile {

// Base for every error the library raises on a violated precondition.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
  public:
    using Error::Error;
};

class GroupMismatchError : public Error {
  public:
    using Error::Error;
};

class SingularMatrixError : public Error {
  public:
    using Error::Error;
};

class FactorizationError : public Error {
  public:
    using Error::Error;
};

class DomainError : public Error {
  public:
    using Error::Error;
};

// Two arms of the group model coincide, so T collapses below 2n+1 elements.
class ArmCollisionError : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace leetile
