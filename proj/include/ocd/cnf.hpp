#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ocd {

struct Literal {
    int var = 1;  // 1-based
    bool positive = true;

    bool operator==(const Literal&) const = default;
};

using Clause = std::array<Literal, 3>;

// 3-CNF instance. Every clause has three distinct variables.
struct CnfFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;

    int num_clauses() const { return static_cast<int>(clauses.size()); }
};

// values[i - 1] is the truth value of variable i.
struct Assignment {
    std::vector<bool> values;

    bool operator[](int var) const { return values.at(var - 1); }
    bool operator==(const Assignment&) const = default;
};

inline constexpr int kDefaultMaxSatVars = 24;

// Throws InputError when the formula breaks the 3-CNF invariants.
void validate(const CnfFormula& f);

// DIMACS CNF: optional 'c' comment lines, 'p cnf <n> <m>', then m zero-terminated clauses.
// Errors are ParseError with the offending line number.
CnfFormula parse_dimacs_cnf(std::istream& in);
CnfFormula parse_dimacs_cnf(const std::string& text);
CnfFormula read_dimacs_cnf_file(const std::string& path);

void write_dimacs_cnf(std::ostream& out, const CnfFormula& f);

bool satisfies(const CnfFormula& f, const Assignment& a);

// First model in lexicographic order (variable 1 most significant, F < T), or nullopt.
// Throws CapExceeded above max_vars.
std::optional<Assignment> brute_force_sat(const CnfFormula& f, int max_vars = kDefaultMaxSatVars);

} // namespace ocd
