#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qdiam {

enum class Errc {
  NonPrimePower,
  ZeroInverse,
  DimensionMismatch,
  AmbientMismatch,
  ParameterOutOfRange,
  BudgetExceeded,
  InvalidConfiguration,
  EmptyFamily,
  ParseError,
  NotExhaustive,
  TimeoutExceeded,
};

const char* errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// the CLI and the Python bindings can map it to an exit status / exception.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::string would_be_count)
      : Error(Errc::BudgetExceeded, what + " (would need " + would_be_count + ")"),
        count_(std::move(would_be_count)) {}

  /// Exact size that the refused enumeration would have produced (decimal).
  const std::string& would_be_count() const noexcept { return count_; }

 private:
  std::string count_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(Errc::ParseError, line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qdiam
