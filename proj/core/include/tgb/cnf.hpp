#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tgb/types.hpp"

namespace tgb {

// Signed literal over variables 1..variable_count.
struct Literal {
  int variable = 0;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct CnfFormula {
  int variable_count = 0;
  std::vector<std::vector<Literal>> clauses;

  int clause_count() const { return static_cast<int>(clauses.size()); }
};

struct CnfValidation {
  bool valid = true;
  std::string message;
};

// Variable indices in range, clauses non-empty with at most three literals,
// no clause mentioning a variable twice.
CnfValidation validate(const CnfFormula& formula);

// DIMACS-like text: optional 'c' comments, "p cnf <vars> <clauses>" header,
// clause lines of signed ints terminated by 0.
CnfFormula read_dimacs(std::istream& in);
CnfFormula read_dimacs_file(const std::string& path);
void write_dimacs(std::ostream& out, const CnfFormula& formula);

// Exhaustive satisfiability check; returns the lexicographically first
// satisfying assignment (false before true, x1 most significant) or nullopt.
// Guarded against formulas over more than max_variables variables.
std::optional<std::vector<bool>> sat_brute(const CnfFormula& formula,
                                           int max_variables = 20);

bool satisfies(const CnfFormula& formula, const std::vector<bool>& assignment);

}  // namespace tgb
