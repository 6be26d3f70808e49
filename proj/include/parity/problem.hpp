#ifndef PARITY_PROBLEM_HPP
#define PARITY_PROBLEM_HPP

#include <string>
#include <vector>

#include "parity/hypergraph.hpp"

namespace parity {

// A two-body interaction problem read from term lines. Coefficients are
// accepted and discarded: the constraint construction only depends on which
// pairs interact.
struct ParsedProblem {
  Hypergraph graph;
  // variable name -> vertex id, sorted by name; ids are 1..n
  std::vector<std::pair<std::string, VertexId>> variables;
  std::vector<std::string> warnings;  // e.g. merged duplicate terms
};

// Terms are separated by newlines or ';'. Each term is either
//   J <var_a> <var_b>     (an .ising line; J parses as a number)
// or
//   <var_a> <var_b>
// Variables map to vertex ids 1..n in sorted name order. Self-interactions
// are rejected; duplicate terms merge with a warning. '#' starts a comment.
ParsedProblem parse_problem(const std::string& text);

}  // namespace parity

#endif  // PARITY_PROBLEM_HPP
