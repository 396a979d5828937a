#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace sgd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. `line()` is 1-based; 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Structural violation while constructing a graph (loop, duplicate edge, ...).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Bad argument to an operation (length mismatch, out-of-range size, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A distance operation was asked for on a disconnected graph.
class DisconnectedError : public Error {
 public:
  explicit DisconnectedError(int unreachable)
      : Error("graph is disconnected: vertex " + std::to_string(unreachable + 1) +
              " is unreachable from vertex 1"),
        unreachable_(unreachable) {}

  /// 0-based index of a vertex not reachable from vertex 0.
  int unreachable() const noexcept { return unreachable_; }

 private:
  int unreachable_;
};

/// D^± / L^± requested for a graph with an incompatible vertex pair.
class IncompatibleError : public Error {
 public:
  explicit IncompatibleError(std::pair<int, int> witness)
      : Error("graph is not distance-compatible: pair (" + std::to_string(witness.first + 1) +
              ", " + std::to_string(witness.second + 1) +
              ") has both positive and negative shortest paths"),
        witness_(witness) {}

  /// 0-based vertex pair, first < second.
  std::pair<int, int> witness() const noexcept { return witness_; }

 private:
  std::pair<int, int> witness_;
};

/// A cross-check between two independent computations failed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace sgd
