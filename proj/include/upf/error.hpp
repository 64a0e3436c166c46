#pragma once

#include <stdexcept>
#include <string>

namespace upf {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A constructor or operation received parameters outside their valid range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A rate was outside the domain of the function being evaluated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Non-positive price handed to a user, or bids that would yield one.
class PriceError : public Error {
 public:
  using Error::Error;
};

// The upper bracket grew past its cap without finding a sign change.
class NoRootError : public Error {
 public:
  using Error::Error;
};

}  // namespace upf
