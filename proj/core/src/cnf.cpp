#include "tgb/cnf.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tgb {

CnfValidation validate(const CnfFormula& formula) {
  if (formula.variable_count < 1) {
    return {false, "variable count must be at least 1"};
  }
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    const auto& clause = formula.clauses[c];
    if (clause.empty()) {
      return {false, "clause " + std::to_string(c + 1) + " is empty"};
    }
    if (clause.size() > 3) {
      return {false, "clause " + std::to_string(c + 1) + " has more than 3 literals"};
    }
    for (std::size_t i = 0; i < clause.size(); ++i) {
      if (clause[i].variable < 1 || clause[i].variable > formula.variable_count) {
        return {false, "clause " + std::to_string(c + 1) + " uses variable " +
                           std::to_string(clause[i].variable) + " out of range"};
      }
      for (std::size_t j = i + 1; j < clause.size(); ++j) {
        if (clause[i].variable == clause[j].variable) {
          return {false, "clause " + std::to_string(c + 1) + " repeats variable " +
                             std::to_string(clause[i].variable)};
        }
      }
    }
  }
  return {};
}

CnfFormula read_dimacs(std::istream& in) {
  CnfFormula formula;
  bool seen_header = false;
  int declared_clauses = 0;
  std::vector<Literal> clause;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok) || tok == "c") continue;
    if (tok == "p") {
      std::string fmt;
      if (!(tokens >> fmt >> formula.variable_count >> declared_clauses) || fmt != "cnf") {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": malformed 'p cnf' header");
      }
      seen_header = true;
      continue;
    }
    if (!seen_header) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": clause before 'p cnf' header");
    }
    // Clause lines: signed ints until 0 (clauses may span lines).
    do {
      char* end = nullptr;
      const long value = std::strtol(tok.c_str(), &end, 10);
      if (end == tok.c_str() || *end != '\0') {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": bad literal '" + tok + "'");
      }
      if (value == 0) {
        formula.clauses.push_back(clause);
        clause.clear();
      } else {
        clause.push_back({static_cast<int>(std::labs(value)), value > 0});
      }
    } while (tokens >> tok);
  }
  if (!seen_header) throw std::runtime_error("missing 'p cnf' header");
  if (!clause.empty()) throw std::runtime_error("last clause not terminated by 0");
  if (declared_clauses != formula.clause_count()) {
    throw std::runtime_error("header declares " + std::to_string(declared_clauses) +
                             " clauses, found " + std::to_string(formula.clause_count()));
  }
  return formula;
}

CnfFormula read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const CnfFormula& formula) {
  out << "p cnf " << formula.variable_count << ' ' << formula.clause_count() << "\n";
  for (const auto& clause : formula.clauses) {
    for (const Literal& lit : clause) {
      out << (lit.positive ? lit.variable : -lit.variable) << ' ';
    }
    out << "0\n";
  }
}

bool satisfies(const CnfFormula& formula, const std::vector<bool>& assignment) {
  for (const auto& clause : formula.clauses) {
    bool sat = false;
    for (const Literal& lit : clause) {
      if (assignment[static_cast<std::size_t>(lit.variable - 1)] == lit.positive) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

std::optional<std::vector<bool>> sat_brute(const CnfFormula& formula,
                                           int max_variables) {
  const int l = formula.variable_count;
  if (l > max_variables) {
    throw SizeGuardError("sat_brute guard: " + std::to_string(l) + " variables > " +
                         std::to_string(max_variables));
  }
  std::vector<bool> assignment(static_cast<std::size_t>(l), false);
  const std::uint64_t total = std::uint64_t{1} << l;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    // x1 is the most significant bit so assignments come out in
    // lexicographic order with false before true.
    for (int i = 0; i < l; ++i) {
      assignment[static_cast<std::size_t>(i)] =
          (bits >> (l - 1 - i)) & std::uint64_t{1};
    }
    if (satisfies(formula, assignment)) return assignment;
  }
  return std::nullopt;
}

}  // namespace tgb
