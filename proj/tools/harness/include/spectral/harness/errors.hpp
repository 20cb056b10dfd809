#pragma once

#include <string>

#include "spectral/errors.hpp"

namespace spectral::harness {

/// Invalid or inconsistent run configuration. The message names the field.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& field, const std::string& problem)
      : Error("config field '" + field + "': " + problem), field_(field) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A grid file does not start with the expected header lines.
class MalformedHeader : public IoError {
 public:
  using IoError::IoError;
};

/// A grid file's row count or indices disagree with its header.
class DimensionMismatch : public IoError {
 public:
  using IoError::IoError;
};

}  // namespace spectral::harness
