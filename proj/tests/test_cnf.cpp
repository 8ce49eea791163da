#include <doctest.h>

#include "ocd/cnf.hpp"
#include "ocd/errors.hpp"
#include "ocd/instances.hpp"

#include <sstream>

using namespace ocd;

namespace {

// Independent check: try every assignment, variable 1 first, F before T.
std::optional<std::vector<bool>> first_model_by_recursion(const CnfFormula& f) {
    std::vector<bool> values(f.num_vars);
    std::optional<std::vector<bool>> found;
    auto rec = [&](auto&& self, int i) -> void {
        if (found) return;
        if (i == f.num_vars) {
            Assignment a{values};
            if (satisfies(f, a)) found = values;
            return;
        }
        for (bool v : {false, true}) {
            values[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return found;
}

} // namespace

TEST_CASE("parse a single clause") {
    CnfFormula f = parse_dimacs_cnf("p cnf 3 1\n1 -2 3 0\n");
    CHECK(f.num_vars == 3);
    REQUIRE(f.num_clauses() == 1);
    CHECK(f.clauses[0][0] == Literal{1, true});
    CHECK(f.clauses[0][1] == Literal{2, false});
    CHECK(f.clauses[0][2] == Literal{3, true});
}

TEST_CASE("parse the worked example") {
    CnfFormula f = parse_dimacs_cnf("c five variables\np cnf 5 4\n-1 -2 3 0\n1 3 5 0\n-3 -4 5 0\n-1 -3 4 0\n");
    CHECK(f.num_vars == 5);
    CHECK(f.num_clauses() == 4);
    CHECK(f.clauses[3][2] == Literal{4, true});

    // Clauses may span lines.
    CnfFormula g = parse_dimacs_cnf("p cnf 3 2\n1 2\n3 0 -1\n-2 -3 0\n");
    CHECK(g.num_clauses() == 2);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_WITH_AS(parse_dimacs_cnf("p cnf 2 1\n1 -1 2 0\n"), doctest::Contains("complementary pair"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs_cnf("p cnf 3 1\n1 2 0\n"), doctest::Contains("line 2: clause has 2"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs_cnf("p cnf 3 1\n1 2 4 0\n"), doctest::Contains("variable 4"), ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs_cnf("p cnf 3\n"), doctest::Contains("line 1: malformed header"), ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs_cnf("p dnf 3 1\n"), doctest::Contains("malformed header"), ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs_cnf("1 2 3 0\n"), doctest::Contains("before 'p cnf'"), ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n"), doctest::Contains("declares 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs_cnf("p cnf 3 1\n1 2 3\n"), doctest::Contains("not terminated"), ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs_cnf("p cnf 3 1\n1 1 3 0\n"), doctest::Contains("duplicate literal"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs_cnf("p cnf 3 1\n1 x 3 0\n"), doctest::Contains("integer literal"),
                         ParseError);
}

TEST_CASE("brute_force_sat") {
    auto m = brute_force_sat(worked_example_formula());
    REQUIRE(m);
    CHECK(satisfies(worked_example_formula(), *m));
    CHECK(m->values == *first_model_by_recursion(worked_example_formula()));

    std::mt19937_64 rng(1);
    CHECK_FALSE(brute_force_sat(saturated_unsat_3cnf(3, 0, rng)));

    auto single = brute_force_sat(parse_dimacs_cnf("p cnf 3 1\n1 2 3 0\n"));
    REQUIRE(single);
    CHECK(single->values == std::vector<bool>{false, false, true});

    CnfFormula big;
    big.num_vars = 25;
    CHECK_THROWS_AS(brute_force_sat(big), CapExceeded);
}

TEST_CASE("brute_force_sat agrees with recursive enumeration") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);
        CnfFormula f = random_3cnf(n, 1 + static_cast<int>(rng() % 25), rng);
        auto fast = brute_force_sat(f);
        auto slow = first_model_by_recursion(f);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) REQUIRE(fast->values == *slow);
    }
}

TEST_CASE("saturated instances are unsatisfiable") {
    std::mt19937_64 rng(4);
    for (int extra = 0; extra < 5; ++extra) {
        for (int n : {3, 4, 5}) {
            CnfFormula f = saturated_unsat_3cnf(n, extra, rng);
            CHECK(f.num_clauses() == 8 + extra);
            CHECK_NOTHROW(validate(f));
            CHECK_FALSE(brute_force_sat(f));
        }
    }
}

TEST_CASE("DIMACS writer round trip") {
    std::mt19937_64 rng(8);
    CnfFormula f = random_3cnf(6, 7, rng);
    std::ostringstream out;
    write_dimacs_cnf(out, f);
    CnfFormula g = parse_dimacs_cnf(out.str());
    CHECK(g.num_vars == f.num_vars);
    CHECK(g.clauses == f.clauses);
}
