#include "proplabel/formula.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace proplabel {

const char* mode_name(FormulaMode mode) {
    switch (mode) {
    case FormulaMode::Sat: return "sat";
    case FormulaMode::Nae: return "nae";
    case FormulaMode::OneInThree: return "1in3";
    case FormulaMode::TwoSat: return "2sat";
    }
    return "?";
}

void validate(const Formula& phi) {
    if (phi.var_count < 0) throw std::invalid_argument("formula: negative variable count");
    for (const auto& clause : phi.clauses) {
        for (int lit : clause) {
            if (lit == 0) throw std::invalid_argument("formula: zero literal");
            if (std::abs(lit) > phi.var_count)
                throw std::invalid_argument("formula: literal " + std::to_string(lit) +
                                            " out of range");
        }
        if (phi.mode == FormulaMode::TwoSat && clause.size() != 2)
            throw std::invalid_argument("formula: 2-sat clauses must have exactly 2 literals");
        if ((phi.mode == FormulaMode::Nae || phi.mode == FormulaMode::OneInThree) &&
            clause.size() < 2)
            throw std::invalid_argument("formula: clause width < 2 for this mode");
    }
}

bool is_monotone(const Formula& phi) {
    for (const auto& clause : phi.clauses)
        for (int lit : clause)
            if (lit < 0) return false;
    return true;
}

std::vector<int> occurrence_counts(const Formula& phi) {
    std::vector<int> gamma(phi.var_count + 1, 0);
    for (const auto& clause : phi.clauses) {
        std::set<int> vars;
        for (int lit : clause) vars.insert(std::abs(lit));
        for (int v : vars) ++gamma[v];
    }
    return gamma;
}

Formula parse_dimacs_cnf(const std::string& text, FormulaMode mode) {
    std::istringstream in(text);
    std::string line;
    Formula phi;
    phi.mode = mode;
    bool have_header = false;
    int declared_clauses = 0;
    std::vector<int> lits;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c" || first[0] == '#') continue;
        if (first == "p") {
            std::string kind;
            if (!(ls >> kind >> phi.var_count >> declared_clauses) || kind != "cnf")
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'p cnf <vars> <clauses>'");
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError("line " + std::to_string(line_no) + ": clause before header");
        ls.clear();
        ls.str(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                phi.clauses.push_back(lits);
                lits.clear();
            } else {
                lits.push_back(lit);
            }
        }
    }
    if (!have_header) throw ParseError("missing 'p cnf' header");
    if (!lits.empty()) throw ParseError("unterminated clause (missing trailing 0)");
    if (static_cast<int>(phi.clauses.size()) != declared_clauses)
        throw ParseError("declared " + std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(phi.clauses.size()));
    validate(phi);
    return phi;
}

std::string serialize_dimacs_cnf(const Formula& phi) {
    std::ostringstream out;
    out << "p cnf " << phi.var_count << ' ' << phi.clauses.size() << '\n';
    for (const auto& clause : phi.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

} // namespace proplabel
