#pragma once

#include <stdexcept>
#include <string>

namespace skg {

// (n, k, s) outside the supported domain k >= 1, s >= 2, n >= s*k + 1, or a
// position/option that does not fit the instance.
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A bitstring or element set that does not describe a vertex of S(n,k,s).
class VertexError : public std::invalid_argument {
 public:
  enum class Kind { Length, Alphabet, Range, Cardinality, Stability, Mismatch };

  VertexError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// An operation was applied outside its domain, e.g. L(x) for x not in Y.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Brute-force routine refused an instance above its size bound.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace skg
