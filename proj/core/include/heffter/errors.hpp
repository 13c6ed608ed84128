#pragma once

#include <stdexcept>
#include <string>

namespace heffter {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No implemented construction (or proposition) covers the requested (n, t).
class UnsupportedParameters : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search was asked to run on an input above its size bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// A line ordering whose partial sums collide was used where a path is required.
class NotSimple : public Error {
 public:
  using Error::Error;
};

/// The rotation seed built from a direction assignment is not a single cycle.
class NotCyclic : public Error {
 public:
  using Error::Error;
};

}  // namespace heffter
