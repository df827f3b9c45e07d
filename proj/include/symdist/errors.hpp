#pragma once

#include <stdexcept>
#include <string>

namespace symdist {

// Malformed graph data: bad endpoints, self-loops, asymmetric rows, overflow.
class InvalidGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unparsable textual input (graph6 lines, family expressions, theorem ids).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is well-formed but exceeds what an exact solver is allowed to handle.
class SolverLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Operation only defined on connected graphs.
class NotConnected : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace symdist
