#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bugscope {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 / edge-list input. Line and column are 1-based; column 0
/// means "whole line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) +
              (column ? ", char " + std::to_string(column) : std::string()) +
              ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraphError : public PreconditionError {
 public:
  DisconnectedGraphError()
      : PreconditionError("graph is disconnected; betweenness is defined for connected graphs only") {}
};

/// Input exceeds a built-in size cap (enumerator limit, oracle limit, ...).
class UnsupportedSizeError : public Error {
 public:
  using Error::Error;
};

/// Some edge is close to every vertex of the host graph, so 1/(n - |close(e)|)
/// does not exist.
class UndefinedWeightError : public Error {
 public:
  UndefinedWeightError(std::size_t u, std::size_t v)
      : Error("edge {" + std::to_string(u) + "," + std::to_string(v) +
              "} is close to every vertex; its weight is undefined"),
        u_(u),
        v_(v) {}

  std::size_t u() const noexcept { return u_; }
  std::size_t v() const noexcept { return v_; }

 private:
  std::size_t u_;
  std::size_t v_;
};

}  // namespace bugscope
