#pragma once

#include <stdexcept>
#include <string>

namespace ecm {

/// Input-file error carrying the 1-based line it was detected on (0 when the
/// problem concerns the file as a whole).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ecm
