#include "parity/problem.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace parity {

namespace {

bool parses_as_number(const std::string& tok) {
  if (tok.empty()) return false;
  std::size_t pos = 0;
  try {
    (void)std::stod(tok, &pos);
  } catch (...) {
    return false;
  }
  return pos == tok.size();
}

}  // namespace

ParsedProblem parse_problem(const std::string& text) {
  // split into terms at newlines and semicolons, dropping '#' comments
  std::vector<std::string> terms;
  std::string cur;
  bool in_comment = false;
  for (char c : text) {
    if (c == '\n' || c == ';') {
      terms.push_back(cur);
      cur.clear();
      in_comment = false;
    } else if (c == '#') {
      in_comment = true;
    } else if (!in_comment) {
      cur.push_back(c);
    }
  }
  terms.push_back(cur);

  std::set<std::pair<std::string, std::string>> seen;
  std::vector<std::pair<std::string, std::string>> pairs;
  ParsedProblem out;
  bool coefficients_seen = false;

  for (const std::string& term : terms) {
    std::istringstream ss(term);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;

    std::string a, b;
    if (tokens.size() == 3) {
      if (!parses_as_number(tokens[0])) {
        throw InputError("malformed term '" + term +
                         "': expected 'J var_a var_b' or 'var_a var_b'");
      }
      coefficients_seen = true;
      a = tokens[1];
      b = tokens[2];
    } else if (tokens.size() == 2) {
      a = tokens[0];
      b = tokens[1];
    } else {
      throw InputError("malformed term '" + term + "'");
    }
    if (a == b) {
      throw InputError("self-interaction '" + a + " " + b + "' is not allowed");
    }
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    if (!seen.insert(key).second) {
      out.warnings.push_back("duplicate term '" + a + " " + b + "' merged");
      continue;
    }
    pairs.push_back(key);
  }
  if (coefficients_seen) {
    out.warnings.push_back("coefficients parsed and ignored");
  }

  std::set<std::string> names;
  for (const auto& [a, b] : pairs) {
    names.insert(a);
    names.insert(b);
  }
  std::map<std::string, VertexId> id_of;
  VertexId next = 1;
  for (const std::string& name : names) {
    id_of[name] = next;
    out.variables.emplace_back(name, next);
    ++next;
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : pairs) {
    edges.push_back(make_edge({id_of[a], id_of[b]}));
  }
  std::vector<VertexId> vertices;
  for (VertexId v = 1; v < next; ++v) vertices.push_back(v);
  out.graph = Hypergraph::create(std::move(vertices), std::move(edges));
  return out;
}

}  // namespace parity
