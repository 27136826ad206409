#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gwis {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed source text. `offset` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::size_t line, std::size_t column,
             const std::string& message, std::vector<std::string> expected = {});

  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// A term that breaks the contraction rules (see validate()).
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Embedded or user-supplied data files are inconsistent with their schema.
class DataIntegrityError : public Error {
 public:
  using Error::Error;
};

/// Evaluation of a linear form with an incomplete assignment.
class MissingUnknownError : public Error {
 public:
  explicit MissingUnknownError(int index);
  int index() const noexcept { return index_; }

 private:
  int index_;
};

/// The homogeneous system does not pin down a unique normalized solution.
class SolveError : public Error {
 public:
  using Error::Error;
};

/// Operation outside the linear-form algebra, e.g. product of two non-constant forms.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace gwis
