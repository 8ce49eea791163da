#include "ocd/verify.hpp"

#include "ocd/alteration.hpp"
#include "ocd/closed_forms.hpp"
#include "ocd/errors.hpp"
#include "ocd/instances.hpp"
#include "ocd/reduction.hpp"
#include "ocd/solver.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace ocd {

bool VerifyReport::all_passed() const { return failures() == 0; }

int VerifyReport::failures() const {
    return static_cast<int>(std::count_if(items.begin(), items.end(), [](const CheckItem& c) { return !c.passed; }));
}

namespace {

using nlohmann::json;

json edges_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back({e.u, e.v});
    return out;
}

json graph_json(const Graph& g) {
    return {{"order", g.order()}, {"edges", edges_json(g.edges())}};
}

json formula_json(const CnfFormula& f) {
    json clauses = json::array();
    for (const Clause& c : f.clauses) {
        json lits = json::array();
        for (const Literal& l : c) lits.push_back(l.positive ? l.var : -l.var);
        clauses.push_back(lits);
    }
    return {{"vars", f.num_vars}, {"clauses", clauses}};
}

void check(VerifyReport& r, std::string name, bool passed, json detail) {
    r.items.push_back({std::move(name), passed, std::move(detail)});
}

void check_bondage_formula(VerifyReport& r, Family family, int n, int expected, const SearchOptions& opts) {
    Graph g = generate_family(family, n);
    AlterationResult res = bondage_ocd(g, std::nullopt, opts);
    check(r, "b_OCD(" + to_string(family) + " " + std::to_string(n) + ")", res.k == expected,
          {{"expected", expected}, {"computed", res.k}, {"witness", edges_json(res.witness_edges)}});
}

void require_claims_params(const ClaimsSuiteParams& p) {
    if (p.vars < 3 || p.vars > kClaimsMaxVars) {
        throw CapExceeded("--vars must lie in 3.." + std::to_string(kClaimsMaxVars));
    }
    if (p.max_clauses < 1 || p.max_clauses > kClaimsMaxClauses) {
        throw CapExceeded("--clauses must lie in 1.." + std::to_string(kClaimsMaxClauses));
    }
    if (p.samples < 0 || p.unsat_samples < 0) throw InputError("sample counts must be non-negative");
}

struct LabeledFormula {
    std::string label;
    CnfFormula formula;
};

std::vector<LabeledFormula> claim_instances(const ClaimsSuiteParams& p, bool allow_worked_example) {
    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<int> m_dist(1, p.max_clauses);
    std::vector<LabeledFormula> out;
    if (allow_worked_example && p.include_worked_example) out.push_back({"worked-example", worked_example_formula()});
    for (int s = 0; s < p.samples; ++s) {
        out.push_back({"random-" + std::to_string(s + 1), random_3cnf(p.vars, m_dist(rng), rng)});
    }
    for (int s = 0; s < p.unsat_samples; ++s) {
        // The s-th saturated instance carries s extra clauses.
        out.push_back({"saturated-" + std::to_string(s + 1), saturated_unsat_3cnf(p.vars, s, rng)});
    }
    return out;
}

} // namespace

VerifyReport verify_families(const FamilySuiteParams& p, const SearchOptions& opts) {
    if (p.max_n < 3 || p.max_n > kFamiliesMaxN) {
        throw CapExceeded("--max-n must lie in 3.." + std::to_string(kFamiliesMaxN));
    }
    VerifyReport r{"families", {}};
    // Complete graphs grow quickly in edge count; K_8 is the largest exhaustive case.
    for (int n = 3; n <= std::min(p.max_n, 8); ++n) check_bondage_formula(r, Family::complete, n, b_ocd_complete(n), opts);
    for (int n = 3; n <= p.max_n; ++n) check_bondage_formula(r, Family::cycle, n, b_ocd_cycle(n), opts);
    for (int n = 2; n <= p.max_n; ++n) check_bondage_formula(r, Family::path, n, b_ocd_path(n), opts);

    for (Family family : {Family::path, Family::cycle}) {
        for (int n = family == Family::path ? 1 : 3; n <= p.max_n; ++n) {
            int expected = gamma_tilde_path_cycle(family, n);
            SolveResult got = gamma_tilde(generate_family(family, n), opts);
            check(r, "gamma_tilde(" + to_string(family) + " " + std::to_string(n) + ")", got.value == expected,
                  {{"expected", expected}, {"computed", got.value}, {"witness", got.witness.ids()}});
        }
    }

    std::mt19937_64 rng(p.seed);
    for (int s = 0; s < p.galaxies; ++s) {
        Graph g = random_galaxy(4, 10, rng);
        AlterationResult res = bondage_ocd(g, std::nullopt, opts);
        check(r, "galaxy " + std::to_string(s + 1) + ": b_OCD = |E|", res.k == galaxy_bondage(g),
              {{"graph", graph_json(g)}, {"size", g.size()}, {"computed", res.k}});
    }
    std::uniform_int_distribution<int> order_dist(4, 6);
    for (int s = 0; s < p.non_galaxies; ++s) {
        Graph g;
        do {
            g = random_connected_graph(order_dist(rng), rng);
        } while (is_galaxy(g));
        AlterationResult res = bondage_ocd(g, std::nullopt, opts);
        check(r, "non-galaxy " + std::to_string(s + 1) + ": b_OCD < |E|", res.k < g.size(),
              {{"graph", graph_json(g)}, {"size", g.size()}, {"computed", res.k}});
    }
    return r;
}

VerifyReport verify_lemma1(int max_n) {
    if (max_n < 3 || max_n > kLemmaSuiteMaxN) {
        throw CapExceeded("--max-n must lie in 3.." + std::to_string(kLemmaSuiteMaxN));
    }
    VerifyReport r{"lemma1", {}};
    for (int n = 3; n <= max_n; ++n) {
        int budget = lemma_budget(n);
        check(r, "K_" + std::to_string(n) + " minus any " + std::to_string(budget) + " edges is connected",
              check_complete_minus_edges_connected(n, budget), {{"n", n}, {"budget", budget}});
    }
    return r;
}

VerifyReport verify_claims3(const ClaimsSuiteParams& p, const SearchOptions& opts) {
    require_claims_params(p);
    VerifyReport r{"claims3", {}};
    for (const auto& [label, f] : claim_instances(p, true)) {
        ReductionArtifact a = build_reinforcement_instance(f);
        const Graph& g = a.graph;
        const int n = a.n;
        const int m = a.m;
        auto model = brute_force_sat(f);
        json base = {{"instance", label}, {"formula", formula_json(f)}, {"satisfiable", model.has_value()}};

        check(r, label + ": order and size",
              g.order() == 3 * n + m + 2 && g.size() == 5 * n + 5 * m + 1,
              {{"instance", label}, {"order", g.order()}, {"size", g.size()}});

        SolveResult gt = gamma_tilde(g, opts);
        json d1 = base;
        d1["gamma_tilde"] = gt.value;
        d1["witness"] = gt.witness.ids();
        check(r, label + ": gamma_tilde = n+1", gt.value == n + 1, d1);

        AlterationResult re = reinforcement_ocd(g, 1, opts);
        const bool r_is_one = re.status == AlterationStatus::found && re.k == 1;
        json d3 = base;
        d3["r_ocd_is_1"] = r_is_one;
        if (r_is_one) {
            Graph reinforced = add_edges(g, re.witness_edges);
            SolveResult after = gamma_tilde(reinforced, opts);
            d3["added_edge"] = edges_json(re.witness_edges);
            d3["gamma_after"] = after.value;
            d3["witness_after"] = after.witness.ids();
            std::vector<std::string> tags;
            for (int v : after.witness.ids()) tags.push_back(a.roles[v].tag());
            d3["witness_after_roles"] = tags;
        }
        check(r, label + ": satisfiable <=> r_OCD = 1", model.has_value() == r_is_one, d3);

        if (model) {
            auto [dprime, edge] = witness_from_assignment(a, *model);
            Edge extra[] = {*edge};
            Graph reinforced = add_edges(g, extra);
            check(r, label + ": assignment yields an OCD set of size n in G+e",
                  dprime.size() == n && is_ocd(reinforced, dprime),
                  {{"instance", label}, {"set", dprime.ids()}, {"edge", {edge->u, edge->v}}});
        }
    }
    return r;
}

VerifyReport verify_claims5(const ClaimsSuiteParams& p, const SearchOptions& opts) {
    require_claims_params(p);
    VerifyReport r{"claims5", {}};
    for (const auto& [label, f] : claim_instances(p, false)) {
        ReductionArtifact a = build_bondage_instance(f);
        const Graph& g = a.graph;
        const int n = a.n;
        const int m = a.m;
        auto model = brute_force_sat(f);
        json base = {{"instance", label}, {"formula", formula_json(f)}, {"satisfiable", model.has_value()}};

        check(r, label + ": order and size",
              g.order() == 5 * n + m + 5 && g.size() == 6 * n + 6 * m + 6,
              {{"instance", label}, {"order", g.order()}, {"size", g.size()}});

        SolveResult gt = gamma_tilde(g, opts);
        json dg = base;
        dg["gamma_tilde"] = gt.value;
        dg["witness"] = gt.witness.ids();
        check(r, label + ": gamma_tilde >= 3n+1", gt.value >= 3 * n + 1, dg);
        check(r, label + ": satisfiable <=> gamma_tilde = 3n+1", model.has_value() == (gt.value == 3 * n + 1), dg);

        int worst = 0;
        json worst_edge;
        for (const auto& [e, value] : gamma_after_each_single_removal(g, opts)) {
            if (value > worst) {
                worst = value;
                worst_edge = {e.u, e.v};
            }
        }
        json d4 = base;
        d4["max_gamma_after_single_removal"] = worst;
        d4["edge"] = worst_edge;
        check(r, label + ": every single removal keeps gamma_tilde <= 3n+2", worst <= 3 * n + 2, d4);

        AlterationResult bo = bondage_ocd(g, 1, opts);
        const bool b_is_one = bo.status == AlterationStatus::found;
        json d5 = base;
        d5["b_ocd_is_1"] = b_is_one;
        if (b_is_one) d5["removed_edge"] = edges_json(bo.witness_edges);
        check(r, label + ": satisfiable <=> b_OCD = 1", model.has_value() == b_is_one, d5);

        if (gt.value == 3 * n + 1) {
            bool avoids = !gt.witness.contains(a.t());
            for (int j = 1; j <= m; ++j) avoids = avoids && !gt.witness.contains(a.clause(j));
            Mask s_bits = 0;
            for (int k = 1; k <= 4; ++k) s_bits |= bit(a.s(k));
            const bool s2_only = (gt.witness.bits() & s_bits) == bit(a.s(2));
            check(r, label + ": minimum witness avoids t and clauses, meets S in {s2}", avoids && s2_only, dg);

            Assignment decoded = assignment_from_witness(a, gt.witness);
            check(r, label + ": witness decodes to a satisfying assignment", satisfies(f, decoded), dg);
        }
        if (model) {
            auto [dset, none] = witness_from_assignment(a, *model);
            check(r, label + ": assignment yields an OCD set of size 3n+1",
                  dset.size() == 3 * n + 1 && is_ocd(g, dset), {{"instance", label}, {"set", dset.ids()}});
        }
    }
    return r;
}

} // namespace ocd
