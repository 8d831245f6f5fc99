#include "racforge/cnf.hpp"

#include <sstream>

#include "racforge/errors.hpp"

namespace racforge {

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int declared_clauses = 0;
  CnfFormula f;
  std::vector<int> pending;
  int clause_start_line = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c" || tok[0] == 'c') continue;
    if (tok == "p") {
      if (have_header) throw ParseError("duplicate problem line", line_no);
      std::string fmt;
      if (!(ls >> fmt) || fmt != "cnf") throw ParseError("expected \"p cnf <vars> <clauses>\"", line_no);
      if (!(ls >> f.num_variables >> declared_clauses)) {
        throw ParseError("expected \"p cnf <vars> <clauses>\"", line_no);
      }
      if (f.num_variables < 1) throw ParseError("variable count must be positive", line_no);
      if (declared_clauses < 0) throw ParseError("negative clause count", line_no);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("clause before problem line", line_no);
    ls.clear();
    ls.str(line);
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (pending.size() != 3) {
          throw Not3Sat("clause ending on line " + std::to_string(line_no) + " has " +
                        std::to_string(pending.size()) + " literals, need exactly 3");
        }
        Clause c;
        for (int i = 0; i < 3; ++i) {
          c[i] = Literal{std::abs(pending[i]), pending[i] < 0};
        }
        if (c[0].var == c[1].var || c[0].var == c[2].var || c[1].var == c[2].var) {
          throw Not3Sat("clause ending on line " + std::to_string(line_no) +
                        " repeats a variable");
        }
        f.clauses.push_back(c);
        pending.clear();
      } else {
        if (pending.empty()) clause_start_line = line_no;
        if (std::abs(lit) > f.num_variables) {
          throw ParseError("literal " + std::to_string(lit) + " out of range", line_no);
        }
        if (pending.size() >= 3) {
          throw Not3Sat("clause starting on line " + std::to_string(clause_start_line) +
                        " has more than 3 literals");
        }
        pending.push_back(lit);
      }
    }
    if (!ls.eof()) throw ParseError("unexpected token in clause data", line_no);
  }
  if (!have_header) throw ParseError("missing problem line", line_no == 0 ? 1 : line_no);
  if (!pending.empty()) throw ParseError("unterminated clause at end of input", line_no);
  if (declared_clauses != f.num_clauses()) {
    throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(f.num_clauses()),
                     line_no);
  }
  return f;
}

std::string write_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_variables << " " << f.num_clauses() << "\n";
  for (const auto& c : f.clauses) {
    for (const auto& l : c) out << (l.negated ? -l.var : l.var) << " ";
    out << "0\n";
  }
  return out.str();
}

bool literal_true(const Literal& l, const Assignment& a) {
  return a[l.var - 1] != l.negated;
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
  if (static_cast<int>(a.size()) != f.num_variables) return false;
  for (const auto& c : f.clauses) {
    bool any = false;
    for (const auto& l : c) {
      if (literal_true(l, a)) {
        any = true;
        break;
      }
    }
    if (!any) return false;
  }
  return true;
}

std::vector<Assignment> all_satisfying(const CnfFormula& f) {
  if (f.num_variables > 20) {
    throw InvalidParameter("exhaustive search capped at 20 variables");
  }
  std::vector<Assignment> out;
  const unsigned long total = 1UL << f.num_variables;
  for (unsigned long mask = 0; mask < total; ++mask) {
    Assignment a(f.num_variables);
    for (int i = 0; i < f.num_variables; ++i) a[i] = (mask >> i) & 1U;
    if (satisfies(f, a)) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace racforge
