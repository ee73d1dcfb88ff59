#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sullivan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (dimension mismatch, unknown name, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A computation was requested beyond the degree the data supports.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Presentation failed validation; carries every problem found.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> problems,
                           const std::string& headline = "invalid presentation")
      : Error(join(headline, problems)), problems_(std::move(problems)) {}

  const std::vector<std::string>& problems() const { return problems_; }

 private:
  static std::string join(const std::string& headline, const std::vector<std::string>& problems) {
    std::string out = headline;
    for (const auto& p : problems) {
      out += "\n  ";
      out += p;
    }
    return out;
  }

  std::vector<std::string> problems_;
};

/// An internal consistency check failed: the input was not what it claimed to be.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// Text could not be parsed. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace sullivan
