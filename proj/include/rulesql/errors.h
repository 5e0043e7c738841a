#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rulesql {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. line() is 1-based, 0 when not line-oriented.
class LoadError : public Error {
 public:
  LoadError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

  // Same error with `prefix` (typically a file name) prepended to the message.
  LoadError Prefixed(const std::string& prefix) const { return LoadError(prefix + what(), line_, 0); }

 private:
  LoadError(const std::string& what, std::size_t line, int) : Error(what), line_(line) {}
  std::size_t line_;
};

class TypeError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace rulesql
