#pragma once

#include <string>
#include <vector>

#include "proplabel/graph.hpp"

namespace proplabel {

/// Satisfaction semantics attached to a clause set.
enum class FormulaMode { Sat, Nae, OneInThree, TwoSat };

const char* mode_name(FormulaMode mode);

/// CNF clause set. Literals are signed 1-based variable indices.
struct Formula {
    int var_count = 0;
    FormulaMode mode = FormulaMode::Sat;
    std::vector<std::vector<int>> clauses;
};

/// Throws std::invalid_argument on out-of-range literals, zero literals,
/// TwoSat clauses of width != 2, or Nae/OneInThree clauses of width < 2.
void validate(const Formula& phi);

/// True when no clause contains a negated literal.
bool is_monotone(const Formula& phi);

/// Occurrence count per variable (1-based), the number of clauses
/// containing the variable with either sign.
std::vector<int> occurrence_counts(const Formula& phi);

/// DIMACS CNF: "p cnf <vars> <clauses>", clauses as 0-terminated signed
/// ints, possibly spanning lines. The mode is supplied out of band.
Formula parse_dimacs_cnf(const std::string& text, FormulaMode mode);
std::string serialize_dimacs_cnf(const Formula& phi);

} // namespace proplabel
