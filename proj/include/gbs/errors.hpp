#pragma once

#include <stdexcept>
#include <string>

namespace gbs {

// Precondition failure of a move. The code identifies which precondition;
// the message names the offending ids.
class MoveError : public std::runtime_error {
public:
  enum class Code {
    NotCollapsible,
    NoEdgesResult,
    DivisorMismatch,
    UnknownEnd,
    NotAdjacent,
    SameEdge,
    NotDivisible,
    NotRedundant,
  };

  MoveError(Code code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Code code() const { return code_; }

private:
  Code code_;
};

// Shelter-derived operations are only meaningful when no strict ascending
// loop is present; they refuse instead of silently extending the theory.
class AscendingContextError : public std::runtime_error {
public:
  explicit AscendingContextError(const std::string& what)
      : std::runtime_error(what) {}
};

// Canonicalization is brute force over vertex orderings; callers must stay
// under the configured vertex bound.
class TooLargeError : public std::runtime_error {
public:
  explicit TooLargeError(const std::string& what)
      : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class SearchError : public std::runtime_error {
public:
  enum class Code {
    NotReduced,
    ForestsOverlap,
    NotReducing,
  };

  SearchError(Code code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Code code() const { return code_; }

private:
  Code code_;
};

// A trace step whose recorded canonical form does not match the replayed
// graph, or whose move cannot be applied to the current state.
class ReplayError : public std::runtime_error {
public:
  explicit ReplayError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gbs
