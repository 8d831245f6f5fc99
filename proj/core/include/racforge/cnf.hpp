#pragma once

#include <array>
#include <string>
#include <vector>

namespace racforge {

/// Literal of a 3-SAT clause; var is 1-based.
struct Literal {
  int var = 0;
  bool negated = false;
  friend bool operator==(const Literal& a, const Literal& b) {
    return a.var == b.var && a.negated == b.negated;
  }
};

using Clause = std::array<Literal, 3>;

struct CnfFormula {
  int num_variables = 0;
  std::vector<Clause> clauses;
  int num_clauses() const { return static_cast<int>(clauses.size()); }
};

using Assignment = std::vector<bool>;  // index 0 = x_1

/// Standard DIMACS CNF. Clauses must have exactly three literals over three
/// distinct variables (Not3Sat otherwise); malformed input raises ParseError
/// with a line number.
CnfFormula parse_dimacs(const std::string& text);

std::string write_dimacs(const CnfFormula& f);

bool literal_true(const Literal& l, const Assignment& a);
bool satisfies(const CnfFormula& f, const Assignment& a);

/// All satisfying assignments by exhaustive 2^n search; n <= 20 enforced.
std::vector<Assignment> all_satisfying(const CnfFormula& f);

}  // namespace racforge
