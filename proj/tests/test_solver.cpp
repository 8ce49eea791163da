#include <doctest.h>

#include "test_util.hpp"

#include "ocd/errors.hpp"
#include "ocd/instances.hpp"
#include "ocd/search.hpp"
#include "ocd/solver.hpp"

using namespace ocd;

namespace {

VertexSet ids(int n, std::initializer_list<int> members) {
    std::vector<int> v(members);
    return VertexSet::from_ids(n, v);
}

} // namespace

TEST_CASE("combination ranking helpers") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(64, 32) == 1832624140942590534ull);
    CHECK(binomial(3, 4) == 0);

    // Colex ranks walk masks of equal popcount in increasing numeric order.
    for (int n = 1; n <= 10; ++n) {
        for (int k = 1; k <= n; ++k) {
            Mask m = unrank_colex(0, n, k);
            CHECK(m == full_mask(k));
            for (std::uint64_t r = 1; r < binomial(n, k); ++r) {
                Mask next = next_same_popcount(m, n);
                REQUIRE(next > m);
                REQUIRE(next == unrank_colex(r, n, k));
                m = next;
            }
            CHECK(next_same_popcount(m, n) == 0);
        }
    }

    for (int n = 1; n <= 9; ++n) {
        for (int k = 1; k <= n; ++k) {
            std::vector<int> idx = unrank_lex(0, n, k);
            for (std::uint64_t r = 1; r < binomial(n, k); ++r) {
                std::vector<int> prev = idx;
                REQUIRE(next_lex_combination(idx, n));
                REQUIRE(prev < idx);
                REQUIRE(idx == unrank_lex(r, n, k));
            }
            CHECK_FALSE(next_lex_combination(idx, n));
        }
    }
}

TEST_CASE("is_dominating") {
    Graph c5 = generate_family(Family::cycle, 5);
    // N[0] = {4,0,1}, N[2] = {1,2,3}.
    CHECK(is_dominating(c5, ids(5, {0, 2})));
    CHECK(oracle::dominating(testutil::to_matrix(c5), 0b00101));
    CHECK(is_dominating(c5, VertexSet::all(5)));
    CHECK(is_dominating(generate_family(Family::star, 5), ids(5, {0})));
    CHECK_FALSE(is_dominating(generate_family(Family::path, 4), ids(4, {0})));
}

TEST_CASE("is_ocd") {
    CHECK(is_ocd(generate_family(Family::cycle, 5), ids(5, {0, 1, 2})));
    CHECK_FALSE(is_ocd(generate_family(Family::cycle, 6), ids(6, {0, 3})));

    Graph p5 = generate_family(Family::path, 5);
    for (int v = 0; v < 5; ++v) CHECK(is_ocd(p5, VertexSet::all(5).complement().with(v).complement()));
    CHECK(is_ocd(p5, VertexSet::all(5)));
}

TEST_CASE("gamma_tilde on small families") {
    CHECK(gamma_tilde(generate_family(Family::path, 3)).value == 2);
    CHECK(gamma_tilde(generate_family(Family::cycle, 3)).value == 1);
    CHECK(gamma_tilde(generate_family(Family::cycle, 9)).value == 7);
    CHECK(gamma_tilde(generate_family(Family::path, 9)).value == 7);
    CHECK(gamma_tilde(generate_family(Family::complete, 5)).value == 1);

    SolveResult empty = gamma_tilde(make_graph(4, {}));
    CHECK(empty.value == 4);
    CHECK(empty.witness == VertexSet::all(4));

    CHECK(gamma_tilde(make_graph(1, {})).value == 1);
    CHECK_THROWS_AS(gamma_tilde(make_graph(0, {})), InputError);
}

TEST_CASE("gamma_tilde witness is the least minimum mask") {
    // C_5: minimum sets are three consecutive vertices; the least mask is {0,1,2}.
    SolveResult c5 = gamma_tilde(generate_family(Family::cycle, 5));
    CHECK(c5.value == 3);
    CHECK(c5.witness.ids() == std::vector<int>{0, 1, 2});
    // P_4: {0,3} is the only minimum set.
    CHECK(gamma_tilde(generate_family(Family::path, 4)).witness.ids() == std::vector<int>{0, 3});
}

TEST_CASE("gamma_plain") {
    Graph c6 = generate_family(Family::cycle, 6);
    CHECK(oracle::minimum(testutil::to_matrix(c6), false).value == 2);
    CHECK(gamma_plain(c6).value == 2);
    CHECK(gamma_plain(generate_family(Family::complete, 6)).value == 1);
    CHECK(gamma_plain(make_graph(3, {})).value == 3);
}

TEST_CASE("solver cap") {
    SearchOptions opts;
    opts.max_order = 5;
    CHECK_THROWS_AS(gamma_tilde(generate_family(Family::path, 6), opts), CapExceeded);
    CHECK(gamma_tilde(generate_family(Family::path, 5), opts).value == 3);
}

TEST_CASE("solver matches the naive enumerator on every labeled graph of order <= 5") {
    for (int n = 1; n <= 5; ++n) {
        const std::uint64_t codes = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t code = 0; code < codes; ++code) {
            Graph g = testutil::labeled_graph(n, code);
            auto a = testutil::to_matrix(g);
            auto naive_t = oracle::minimum(a, true);
            auto naive_p = oracle::minimum(a, false);
            SolveResult t = gamma_tilde(g);
            SolveResult p = gamma_plain(g);
            REQUIRE(t.value == naive_t.value);
            REQUIRE(t.witness.bits() == naive_t.witness);
            REQUIRE(p.value == naive_p.value);
            REQUIRE(p.witness.bits() == naive_p.witness);
        }
    }
}

TEST_CASE("definitional properties on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        Graph g = random_graph(n, 0.35, rng);
        SolveResult t = gamma_tilde(g);
        SolveResult p = gamma_plain(g);
        CHECK(p.value <= t.value);
        CHECK(is_ocd(g, t.witness));
        CHECK(t.witness.size() == t.value);
        CHECK(is_dominating(g, p.witness));
        if (g.isolated() == 0) CHECK(t.value <= n - 1);

        // Certified minimality: nothing one smaller qualifies.
        auto a = testutil::to_matrix(g);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
            if (__builtin_popcountll(s) == t.value - 1) REQUIRE_FALSE(oracle::outer_connected_dominating(a, s));
        }
    }
}

TEST_CASE("forcing leaves does not change results at the n-1 boundary") {
    // K_2 and stars: every minimum set leaves exactly one vertex out.
    CHECK(gamma_tilde(generate_family(Family::path, 2)).value == 1);
    for (int n = 3; n <= 8; ++n) {
        SolveResult s = gamma_tilde(generate_family(Family::star, n));
        CHECK(s.value == n - 1);
        CHECK(s.witness.ids().front() == 0);
    }
}

TEST_CASE("thread count does not change the answer") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(16 + static_cast<int>(rng() % 6), 0.2, rng);
        SearchOptions one;
        one.threads = 1;
        SearchOptions many;
        many.threads = 6;
        SolveResult a = gamma_tilde(g, one);
        SolveResult b = gamma_tilde(g, many);
        CHECK(a.value == b.value);
        CHECK(a.witness == b.witness);
    }
}
