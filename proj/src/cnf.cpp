#include "ocd/cnf.hpp"

#include "ocd/errors.hpp"

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ocd {

namespace {

std::string clause_problem(const Clause& c, int num_vars) {
    for (const Literal& l : c) {
        if (l.var < 1 || l.var > num_vars) {
            return "variable " + std::to_string(l.var) + " outside 1.." + std::to_string(num_vars);
        }
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (c[i].var != c[j].var) continue;
            if (c[i].positive == c[j].positive) return "duplicate literal of variable " + std::to_string(c[i].var);
            return "complementary pair on variable " + std::to_string(c[i].var);
        }
    }
    return {};
}

} // namespace

void validate(const CnfFormula& f) {
    if (f.num_vars < 1) throw InputError("formula needs at least one variable");
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        if (auto why = clause_problem(f.clauses[j], f.num_vars); !why.empty()) {
            throw InputError("clause " + std::to_string(j + 1) + ": " + why);
        }
    }
}

CnfFormula parse_dimacs_cnf(std::istream& in) {
    CnfFormula f;
    bool have_header = false;
    long declared = 0;
    std::vector<int> pending;
    int pending_line = 0;
    std::string line;
    int lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream tokens(line);
        std::string tok;
        if (!(tokens >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            if (have_header) throw ParseError(lineno, "second problem line");
            std::string fmt;
            long n = -1;
            long m = -1;
            std::string extra;
            if (!(tokens >> fmt >> n >> m) || fmt != "cnf" || (tokens >> extra)) {
                throw ParseError(lineno, "malformed header, expected 'p cnf <vars> <clauses>'");
            }
            if (n < 1 || m < 0) throw ParseError(lineno, "header counts out of range");
            f.num_vars = static_cast<int>(n);
            declared = m;
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(lineno, "clause data before 'p cnf' header");
        do {
            long lit = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
            if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
                throw ParseError(lineno, "expected an integer literal, got '" + tok + "'");
            }
            if (lit == 0) {
                if (pending.size() != 3) {
                    throw ParseError(pending_line ? pending_line : lineno,
                                     "clause has " + std::to_string(pending.size()) + " literals, expected 3");
                }
                Clause c;
                for (int i = 0; i < 3; ++i) c[i] = Literal{std::abs(pending[i]), pending[i] > 0};
                if (auto why = clause_problem(c, f.num_vars); !why.empty()) throw ParseError(pending_line, why);
                f.clauses.push_back(c);
                pending.clear();
                pending_line = 0;
                continue;
            }
            if (std::labs(lit) > f.num_vars) {
                throw ParseError(lineno, "variable " + std::to_string(std::labs(lit)) + " outside 1.." +
                                             std::to_string(f.num_vars));
            }
            if (pending.empty()) pending_line = lineno;
            pending.push_back(static_cast<int>(lit));
        } while (tokens >> tok);
    }
    if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'p cnf' header");
    if (!pending.empty()) throw ParseError(pending_line, "clause not terminated by 0");
    if (static_cast<long>(f.clauses.size()) != declared) {
        throw ParseError(lineno, "header declares " + std::to_string(declared) + " clauses, found " +
                                     std::to_string(f.clauses.size()));
    }
    return f;
}

CnfFormula parse_dimacs_cnf(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs_cnf(in);
}

CnfFormula read_dimacs_cnf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open CNF file '" + path + "'");
    return parse_dimacs_cnf(in);
}

void write_dimacs_cnf(std::ostream& out, const CnfFormula& f) {
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const Clause& c : f.clauses) {
        for (const Literal& l : c) out << (l.positive ? l.var : -l.var) << ' ';
        out << "0\n";
    }
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
    for (const Clause& c : f.clauses) {
        bool sat = false;
        for (const Literal& l : c) sat = sat || a[l.var] == l.positive;
        if (!sat) return false;
    }
    return true;
}

std::optional<Assignment> brute_force_sat(const CnfFormula& f, int max_vars) {
    if (f.num_vars > max_vars) {
        throw CapExceeded(std::to_string(f.num_vars) + " variables exceed the brute-force cap of " +
                          std::to_string(max_vars));
    }
    const int n = f.num_vars;
    // Bit (n - i) of the counter holds variable i, so counting up walks assignments
    // lexicographically with variable 1 most significant.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> clause_masks;  // (positive vars, negative vars)
    for (const Clause& c : f.clauses) {
        std::uint64_t pos = 0;
        std::uint64_t neg = 0;
        for (const Literal& l : c) (l.positive ? pos : neg) |= std::uint64_t{1} << (n - l.var);
        clause_masks.emplace_back(pos, neg);
    }
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < end; ++a) {
        bool ok = true;
        for (auto [pos, neg] : clause_masks) {
            if (!(a & pos) && (~a & neg) == 0) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        Assignment model;
        model.values.resize(n);
        for (int i = 1; i <= n; ++i) model.values[i - 1] = (a >> (n - i)) & 1u;
        return model;
    }
    return std::nullopt;
}

} // namespace ocd
