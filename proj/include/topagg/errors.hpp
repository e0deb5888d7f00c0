// Exception types shared across the library.

#pragma once

#include <stdexcept>
#include <string>

namespace topagg {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Mismatched sizes between related objects (ranking vs. list, ragged matrix).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Invalid argument values (empty subsets, non-permutations, bad parameters).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Instance exceeds a configured size cap of an exact solver.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace topagg
