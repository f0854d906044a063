#pragma once

#include <stdexcept>
#include <string>

namespace lightpath {

// Input text could not be parsed; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A configured resource guard was hit (counting-table cap, event budget,
// search-size limit). Deliberately loud: the underlying growth is exponential.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lightpath
