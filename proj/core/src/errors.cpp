#include "spectral/errors.hpp"

#include <sstream>

namespace spectral {

namespace {

std::string radix2_message(std::size_t length, int axis) {
  std::ostringstream out;
  out << "radix-2 transform requires a power-of-two length, got " << length;
  if (axis == 0) {
    out << " along the x axis";
  } else if (axis == 1) {
    out << " along the y axis";
  }
  return out.str();
}

std::string failure_message(double time, const std::string& what) {
  std::ostringstream out;
  out << what << " (t = " << time << ")";
  return out.str();
}

}  // namespace

Radix2Error::Radix2Error(std::size_t length, int axis)
    : InvalidArgument(radix2_message(length, axis)), length_(length), axis_(axis) {}

NumericFailure::NumericFailure(double time, const std::string& what)
    : Error(failure_message(time, what)), time_(time) {}

}  // namespace spectral
