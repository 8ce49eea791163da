#include "ocd/cli.hpp"

#include "ocd/alteration.hpp"
#include "ocd/cnf.hpp"
#include "ocd/errors.hpp"
#include "ocd/graph_io.hpp"
#include "ocd/reduction.hpp"
#include "ocd/solver.hpp"
#include "ocd/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <optional>
#include <ostream>

namespace ocd::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

json edges_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back({e.u, e.v});
    return out;
}

json assignment_json(const Assignment& a) {
    json out = json::object();
    for (int i = 1; i <= static_cast<int>(a.values.size()); ++i) out[std::to_string(i)] = a[i] ? "T" : "F";
    return out;
}

struct Report {
    std::string command;
    json inputs = json::object();
    json result = json::object();
    json stats = json::object();
    std::string status = "ok";
    std::string error;

    json to_json() const {
        json j = {{"command", command}, {"inputs", inputs}, {"result", result}, {"stats", stats}, {"status", status}};
        if (!error.empty()) j["error"] = error;
        return j;
    }
};

void print_text(std::ostream& out, const Report& r) {
    out << "command: " << r.command << '\n';
    out << "status: " << r.status << '\n';
    if (!r.error.empty()) out << "error: " << r.error << '\n';
    for (const auto& [key, value] : r.inputs.items()) out << "input." << key << ": " << value.dump() << '\n';
    if (r.result.contains("items")) {
        for (const auto& item : r.result["items"]) {
            out << (item["passed"].get<bool>() ? "PASS " : "FAIL ") << item["name"].get<std::string>();
            if (!item["passed"].get<bool>()) out << ' ' << item["detail"].dump();
            out << '\n';
        }
        for (const auto& [key, value] : r.result.items()) {
            if (key != "items") out << key << ": " << value.dump() << '\n';
        }
    } else {
        for (const auto& [key, value] : r.result.items()) out << key << ": " << value.dump() << '\n';
    }
    for (const auto& [key, value] : r.stats.items()) out << "stats." << key << ": " << value.dump() << '\n';
}

json alteration_json(const AlterationResult& res) {
    json j = {{"kind", to_string(res.kind)}, {"gamma_before", res.gamma_before}};
    if (res.status == AlterationStatus::found) {
        j["k"] = res.k;
        j["witness_edges"] = edges_json(res.witness_edges);
        j["gamma_after"] = res.gamma_after;
    }
    return j;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact outer-connected domination, bondage and reinforcement numbers"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    int threads = 0;
    int max_order = SearchOptions{}.max_order;
    app.add_flag("--json", as_json, "Emit one JSON object instead of text");
    app.add_option("--threads", threads, "Worker threads (default: OCD_THREADS or all cores)")->check(CLI::NonNegativeNumber);
    app.add_option("--max-order", max_order, "Largest graph order the exact solvers accept")
        ->check(CLI::Range(1, kMaxOrder));

    std::string graph_path;
    std::string cnf_path;
    std::optional<int> max_k;

    auto* gamma_cmd = app.add_subcommand("gamma", "Outer-connected domination number with a witness");
    gamma_cmd->add_option("graph", graph_path, "Edge-list file")->required();

    auto* bondage_cmd = app.add_subcommand("bondage", "Outer-connected bondage number");
    bondage_cmd->add_option("graph", graph_path, "Edge-list file")->required();
    bondage_cmd->add_option("--max-k", max_k, "Give up above this many removed edges")->check(CLI::NonNegativeNumber);

    auto* reinforce_cmd = app.add_subcommand("reinforce", "Outer-connected reinforcement number");
    reinforce_cmd->add_option("graph", graph_path, "Edge-list file")->required();
    reinforce_cmd->add_option("--max-k", max_k, "Give up above this many added edges")->check(CLI::NonNegativeNumber);

    std::string mode_name;
    std::string out_path;
    std::string roles_path;
    auto* reduce_cmd = app.add_subcommand("reduce", "Build a reduction gadget from a 3-CNF formula");
    reduce_cmd->add_option("--mode", mode_name, "reinforcement or bondage")
        ->required()
        ->check(CLI::IsMember({"reinforcement", "bondage"}));
    reduce_cmd->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
    reduce_cmd->add_option("--out", out_path, "Edge-list output file")->required();
    reduce_cmd->add_option("--roles", roles_path, "Roles sidecar output file");

    std::string suite;
    FamilySuiteParams family_params;
    int lemma_max_n = 7;
    std::optional<int> max_n;
    ClaimsSuiteParams claims_params;
    std::optional<int> unsat;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite against the exact solvers");
    verify_cmd->add_option("--suite", suite, "families, lemma1, claims3 or claims5")
        ->required()
        ->check(CLI::IsMember({"families", "lemma1", "claims3", "claims5"}));
    verify_cmd->add_option("--max-n", max_n, "Largest order (families, lemma1)");
    verify_cmd->add_option("--galaxies", family_params.galaxies, "Random galaxies (families)");
    verify_cmd->add_option("--non-galaxies", family_params.non_galaxies, "Random non-galaxies (families)");
    verify_cmd->add_option("--vars", claims_params.vars, "Variables per instance (claims3, claims5)");
    verify_cmd->add_option("--clauses", claims_params.max_clauses, "Maximum clauses per random instance");
    verify_cmd->add_option("--samples", claims_params.samples, "Random instances");
    verify_cmd->add_option("--unsat", unsat, "Saturated unsatisfiable instances (default 5 for claims3, 0 for claims5)");
    std::uint64_t seed = 1;
    verify_cmd->add_option("--seed", seed, "Seed for the random instances");

    int max_vars = kDefaultMaxSatVars;
    auto* sat_cmd = app.add_subcommand("sat", "Brute-force satisfiability of a 3-CNF formula");
    sat_cmd->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
    sat_cmd->add_option("--max-vars", max_vars, "Largest variable count to enumerate")->check(CLI::Range(1, 40));

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    SearchOptions opts;
    opts.max_order = max_order;
    opts.threads = static_cast<unsigned>(threads);

    Report report;
    report.command = app.get_subcommands().front()->get_name();
    int exit_code = kOk;
    const auto start = Clock::now();

    try {
        if (gamma_cmd->parsed()) {
            Graph g = read_edge_list_file(graph_path);
            report.inputs = {{"graph", graph_path}, {"order", g.order()}, {"size", g.size()}};
            SolveResult res = gamma_tilde(g, opts);
            report.result = {{"value", res.value}, {"witness", res.witness.ids()}};
            report.stats["examined"] = res.examined;
        } else if (bondage_cmd->parsed() || reinforce_cmd->parsed()) {
            Graph g = read_edge_list_file(graph_path);
            report.inputs = {{"graph", graph_path}, {"order", g.order()}, {"size", g.size()}};
            if (max_k) report.inputs["max_k"] = *max_k;
            AlterationResult res = bondage_cmd->parsed() ? bondage_ocd(g, max_k, opts)
                                                         : reinforcement_ocd(g, max_k, opts);
            report.result = alteration_json(res);
            report.status = to_string(res.status);
            report.stats["examined"] = res.examined_subsets;
            if (res.status == AlterationStatus::bound_exceeded) exit_code = kLimitExceeded;
        } else if (reduce_cmd->parsed()) {
            CnfFormula f = read_dimacs_cnf_file(cnf_path);
            ReductionMode mode = parse_mode(mode_name);
            report.inputs = {{"cnf", cnf_path}, {"mode", mode_name}, {"out", out_path}};
            if (!roles_path.empty()) report.inputs["roles"] = roles_path;
            ReductionArtifact a = mode == ReductionMode::reinforcement ? build_reinforcement_instance(f)
                                                                       : build_bondage_instance(f);
            write_edge_list_file(out_path, a.graph);
            if (!roles_path.empty()) write_roles_file(roles_path, a);
            report.result = {{"vars", a.n}, {"clauses", a.m}, {"order", a.graph.order()}, {"size", a.graph.size()}};
        } else if (verify_cmd->parsed()) {
            report.inputs = {{"suite", suite}};
            VerifyReport vr;
            if (suite == "families") {
                family_params.max_n = max_n.value_or(12);
                family_params.seed = seed;
                report.inputs["max_n"] = family_params.max_n;
                report.inputs["galaxies"] = family_params.galaxies;
                report.inputs["non_galaxies"] = family_params.non_galaxies;
                vr = verify_families(family_params, opts);
            } else if (suite == "lemma1") {
                lemma_max_n = max_n.value_or(lemma_max_n);
                report.inputs["max_n"] = lemma_max_n;
                vr = verify_lemma1(lemma_max_n);
            } else {
                const bool claims3 = suite == "claims3";
                claims_params.unsat_samples = unsat.value_or(claims3 ? 5 : 0);
                claims_params.seed = seed;
                report.inputs["vars"] = claims_params.vars;
                report.inputs["clauses"] = claims_params.max_clauses;
                report.inputs["samples"] = claims_params.samples;
                report.inputs["unsat"] = claims_params.unsat_samples;
                vr = claims3 ? verify_claims3(claims_params, opts) : verify_claims5(claims_params, opts);
            }
            report.inputs["seed"] = seed;
            json items = json::array();
            for (const auto& item : vr.items) {
                items.push_back({{"name", item.name}, {"passed", item.passed}, {"detail", item.detail}});
            }
            report.result = {{"suite", vr.suite},
                             {"checked", vr.items.size()},
                             {"failed", vr.failures()},
                             {"items", items}};
            if (!vr.all_passed()) {
                report.status = "fail";
                exit_code = kVerificationFailed;
            }
        } else if (sat_cmd->parsed()) {
            CnfFormula f = read_dimacs_cnf_file(cnf_path);
            report.inputs = {{"cnf", cnf_path}, {"vars", f.num_vars}, {"clauses", f.num_clauses()}};
            auto model = brute_force_sat(f, max_vars);
            report.result = {{"satisfiable", model.has_value()}};
            if (model) report.result["model"] = assignment_json(*model);
        }
    } catch (const CapExceeded& e) {
        report.status = "error";
        report.error = e.what();
        exit_code = kLimitExceeded;
    } catch (const InputError& e) {
        report.status = "error";
        report.error = e.what();
        exit_code = kInputError;
    }

    report.stats["wall_ms"] =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();

    if (as_json) {
        out << report.to_json().dump() << '\n';
    } else {
        print_text(out, report);
    }
    if (!report.error.empty()) err << "error: " << report.error << '\n';
    return exit_code;
}

} // namespace ocd::cli
