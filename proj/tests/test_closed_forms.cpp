#include <doctest.h>

#include "test_util.hpp"

#include "ocd/alteration.hpp"
#include "ocd/closed_forms.hpp"
#include "ocd/errors.hpp"
#include "ocd/instances.hpp"
#include "ocd/solver.hpp"

using namespace ocd;

namespace {

// Independent Lemma check: every `budget`-subset of K_n's edges, connectivity by closure.
bool lemma_by_closure(int n, int budget) {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    bool ok = true;
    oracle::for_each_subset(static_cast<int>(all.size()), budget, [&](const std::vector<int>& pick) {
        oracle::Matrix a(n, std::vector<bool>(n, true));
        for (int i = 0; i < n; ++i) a[i][i] = false;
        for (int i : pick) a[all[i].first][all[i].second] = a[all[i].second][all[i].first] = false;
        if (!oracle::connected_by_closure(a, std::vector<bool>(n, true))) ok = false;
        return ok;
    });
    return ok;
}

} // namespace

TEST_CASE("closed-form values") {
    CHECK(b_ocd_complete(3) == 1);
    CHECK(b_ocd_complete(6) == 3);
    CHECK(b_ocd_complete(7) == 4);
    CHECK(b_ocd_cycle(3) == 1);
    CHECK(b_ocd_cycle(4) == 2);
    CHECK(b_ocd_cycle(12) == 4);
    CHECK(b_ocd_path(2) == 1);
    CHECK(b_ocd_path(3) == 2);
    CHECK(b_ocd_path(10) == 3);
    CHECK(gamma_tilde_path_cycle(Family::cycle, 7) == 5);
    CHECK(gamma_tilde_path_cycle(Family::cycle, 3) == 1);
    CHECK(gamma_tilde_path_cycle(Family::path, 3) == 2);
    CHECK(gamma_tilde_path_cycle(Family::path, 2) == 1);
    CHECK(gamma_tilde_path_cycle(Family::path, 1) == 1);

    CHECK_THROWS_AS(b_ocd_complete(2), InputError);
    CHECK_THROWS_AS(b_ocd_cycle(2), InputError);
    CHECK_THROWS_AS(b_ocd_path(1), InputError);
    CHECK_THROWS_AS(gamma_tilde_path_cycle(Family::cycle, 2), InputError);
    CHECK_THROWS_AS(gamma_tilde_path_cycle(Family::star, 5), InputError);
}

TEST_CASE("is_galaxy") {
    int a[] = {3, 4};
    CHECK(is_galaxy(generate_galaxy(a)));
    CHECK_FALSE(is_galaxy(generate_family(Family::cycle, 4)));
    CHECK_FALSE(is_galaxy(generate_family(Family::path, 4)));
    CHECK(is_galaxy(generate_family(Family::path, 3)));
    CHECK(is_galaxy(generate_family(Family::path, 2)));
    CHECK_FALSE(is_galaxy(make_graph(3, {{0, 1}})));
    CHECK_FALSE(is_galaxy(generate_family(Family::complete, 3)));
}

TEST_CASE("galaxy_bondage") {
    int a[] = {2, 2};
    CHECK(galaxy_bondage(generate_galaxy(a)) == 2);
    int b[] = {5};
    CHECK(galaxy_bondage(generate_galaxy(b)) == 4);
    int c[] = {3, 2, 2};
    CHECK(galaxy_bondage(generate_galaxy(c)) == 4);

    int small[] = {3};
    CHECK_THROWS_AS(galaxy_bondage(generate_galaxy(small)), InputError);
    CHECK_THROWS_AS(galaxy_bondage(generate_family(Family::cycle, 5)), InputError);
}

TEST_CASE("complete graphs stay connected within the edge budget") {
    CHECK(lemma_budget(5) == 2);
    CHECK(lemma_budget(6) == 3);
    CHECK(lemma_budget(4) == 2);
    CHECK(check_complete_minus_edges_connected(5, 2));
    CHECK(check_complete_minus_edges_connected(6, 3));
    CHECK_FALSE(check_complete_minus_edges_connected(4, 3));
    CHECK_THROWS_AS(check_complete_minus_edges_connected(kLemmaMaxOrder + 1), CapExceeded);

    for (int n = 3; n <= 7; ++n) {
        CHECK(check_complete_minus_edges_connected(n));
        CHECK(check_complete_minus_edges_connected(n) == lemma_by_closure(n, lemma_budget(n)));
        CHECK(check_complete_minus_edges_connected(n, n - 1) == lemma_by_closure(n, n - 1));
        CHECK_FALSE(check_complete_minus_edges_connected(n, n - 1));
    }
}

TEST_CASE("formulas agree with the exact solvers") {
    for (int n = 3; n <= 7; ++n) CHECK(bondage_ocd(generate_family(Family::complete, n)).k == b_ocd_complete(n));
    for (int n = 3; n <= 10; ++n) CHECK(bondage_ocd(generate_family(Family::cycle, n)).k == b_ocd_cycle(n));
    for (int n = 2; n <= 10; ++n) CHECK(bondage_ocd(generate_family(Family::path, n)).k == b_ocd_path(n));
    for (int n = 1; n <= 12; ++n) {
        CHECK(gamma_tilde(generate_family(Family::path, n)).value == gamma_tilde_path_cycle(Family::path, n));
        if (n >= 3) CHECK(gamma_tilde(generate_family(Family::cycle, n)).value == gamma_tilde_path_cycle(Family::cycle, n));
    }
}

TEST_CASE("galaxies and non-galaxies") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 8; ++i) {
        Graph g = random_galaxy(4, 8, rng);
        REQUIRE(is_galaxy(g));
        CHECK(bondage_ocd(g).k == g.size());
    }
    int checked = 0;
    while (checked < 20) {
        Graph g = random_connected_graph(4 + static_cast<int>(rng() % 3), rng);
        if (is_galaxy(g)) continue;
        ++checked;
        CHECK(bondage_ocd(g).k < g.size());
    }
}
