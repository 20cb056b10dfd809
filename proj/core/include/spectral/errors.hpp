#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spectral {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (empty input, bad spacing, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The fast transform only handles power-of-two lengths.
class Radix2Error : public InvalidArgument {
 public:
  /// `axis` is -1 for one-dimensional transforms, 0 for x and 1 for y.
  Radix2Error(std::size_t length, int axis = -1);

  std::size_t length() const noexcept { return length_; }
  int axis() const noexcept { return axis_; }

 private:
  std::size_t length_;
  int axis_;
};

/// A spectrum was passed in the wrong ordering (Natural vs Centered).
class LayoutError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Two grids that must share metadata do not.
class MetadataMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A solver was asked for something its closed form cannot represent.
class UnsupportedProblem : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Non-finite values appeared during time integration.
class NumericFailure : public Error {
 public:
  explicit NumericFailure(double time, const std::string& what);

  /// Simulation time at which the failure was detected.
  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace spectral
