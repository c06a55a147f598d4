#ifndef LINREZ_ERRORS_HPP
#define LINREZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace linrez {

/// Two values with different ambient variable counts were combined.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition on an argument was violated (k = 0, non-squarefree input, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input file. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A computation exceeded a configured size limit (lattice size, face count).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace linrez

#endif
