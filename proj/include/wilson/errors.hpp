#pragma once

#include <stdexcept>
#include <string>

namespace wilson {

/// Base class for all library errors. `code()` is a stable machine-readable
/// identifier used by the CLI when emitting error reports.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

/// Two sampled grids cannot be combined (unequal step or misaligned offsets).
class GridError : public Error {
public:
  explicit GridError(const std::string& what) : Error("grid", what) {}
};

/// A translation is not an integer multiple of the grid step.
class AlignmentError : public Error {
public:
  explicit AlignmentError(const std::string& what) : Error("alignment", what) {}
};

/// An output grid does not cover the support of the requested result.
class CoverageError : public Error {
public:
  explicit CoverageError(const std::string& what) : Error("coverage", what) {}
};

/// An input object violates one of its declared invariants.
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error("validation", what) {}
};

}  // namespace wilson
