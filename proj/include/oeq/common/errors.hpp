// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace oeq {

/// Bad or inconsistent configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A required input artifact (dataset, checkpoint, label store) is absent
/// (CLI exit code 3).
class MissingPrerequisite : public std::runtime_error {
 public:
  explicit MissingPrerequisite(const std::string& what) : std::runtime_error(what) {}
};

/// Training produced a non-finite loss (CLI exit code 4).
class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Sequence framing violation (length not divisible, misaligned frames, ...).
class FramingError : public std::runtime_error {
 public:
  explicit FramingError(const std::string& what) : std::runtime_error(what) {}
};

/// Tensor shape mismatch; message names the offending axes.
class DimensionError : public std::runtime_error {
 public:
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or incompatible on-disk container.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oeq
