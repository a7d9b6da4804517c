#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace opath {

/// Route is not a permutation of the instance's collectible indices.
class InvalidRouteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance is too large for the requested exact solver.
class SizeExceededError : public std::runtime_error {
 public:
  SizeExceededError(const std::string& what, int n, int limit)
      : std::runtime_error(what), n_(n), limit_(limit) {}

  int n() const noexcept { return n_; }
  int limit() const noexcept { return limit_; }

 private:
  int n_;
  int limit_;
};

/// Experiment configuration failed validation.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text is not syntactically valid; line/column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Structurally valid input with a missing or unusable field.
class FieldError : public std::runtime_error {
 public:
  FieldError(const std::string& what, std::string field)
      : std::runtime_error(what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Filesystem read/write failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace opath
