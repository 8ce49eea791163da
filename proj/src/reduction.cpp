#include "ocd/reduction.hpp"

#include "ocd/errors.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

namespace ocd {

ReductionMode parse_mode(const std::string& name) {
    if (name == "reinforcement") return ReductionMode::reinforcement;
    if (name == "bondage") return ReductionMode::bondage;
    throw InputError("unknown reduction mode '" + name + "' (expected reinforcement or bondage)");
}

std::string to_string(ReductionMode mode) {
    return mode == ReductionMode::reinforcement ? "reinforcement" : "bondage";
}

std::string Role::tag() const {
    const std::string i = std::to_string(index);
    switch (kind) {
        case Kind::pos_lit: return "u" + i;
        case Kind::neg_lit: return "nu" + i;
        case Kind::mid: return "v" + i;
        case Kind::leaf_x: return "x" + i;
        case Kind::leaf_y: return "y" + i;
        case Kind::clause: return "c" + i;
        case Kind::x: return "x";
        case Kind::y: return "y";
        case Kind::s: return "s" + i;
        case Kind::t: return "t";
    }
    return "?";
}

namespace {

int stride(ReductionMode mode) { return mode == ReductionMode::reinforcement ? 3 : 5; }

void require_mode(const ReductionArtifact& a, ReductionMode mode, const char* what) {
    if (a.mode != mode) throw InputError(std::string(what) + " exists only in the " + to_string(mode) + " gadget");
}

} // namespace

int ReductionArtifact::pos_lit(int i) const { return stride(mode) * (i - 1); }
int ReductionArtifact::mid(int i) const { return stride(mode) * (i - 1) + 1; }
int ReductionArtifact::neg_lit(int i) const { return stride(mode) * (i - 1) + 2; }

int ReductionArtifact::leaf_x(int i) const {
    require_mode(*this, ReductionMode::bondage, "x_i");
    return 5 * (i - 1) + 3;
}

int ReductionArtifact::leaf_y(int i) const {
    require_mode(*this, ReductionMode::bondage, "y_i");
    return 5 * (i - 1) + 4;
}

int ReductionArtifact::clause(int j) const { return stride(mode) * n + j - 1; }

int ReductionArtifact::apex_x() const {
    require_mode(*this, ReductionMode::reinforcement, "x");
    return 3 * n + m;
}

int ReductionArtifact::apex_y() const {
    require_mode(*this, ReductionMode::reinforcement, "y");
    return 3 * n + m + 1;
}

int ReductionArtifact::s(int k) const {
    require_mode(*this, ReductionMode::bondage, "s_k");
    return 5 * n + m + k - 1;
}

int ReductionArtifact::t() const {
    require_mode(*this, ReductionMode::bondage, "t");
    return 5 * n + m + 4;
}

namespace {

void add_clause_edges(const CnfFormula& f, const ReductionArtifact& a, std::vector<Edge>& edges) {
    for (int j = 1; j <= f.num_clauses(); ++j) {
        const int c = a.clause(j);
        // Literal vertices precede clause vertices, so (literal, c) is already normalized;
        // sorting by (variable, positive first) fixes the emission order.
        std::vector<Literal> lits(f.clauses[j - 1].begin(), f.clauses[j - 1].end());
        std::sort(lits.begin(), lits.end(), [](const Literal& x, const Literal& y) {
            return x.var != y.var ? x.var < y.var : x.positive > y.positive;
        });
        for (const Literal& l : lits) edges.push_back({l.positive ? a.pos_lit(l.var) : a.neg_lit(l.var), c});
    }
}

} // namespace

ReductionArtifact build_reinforcement_instance(const CnfFormula& f) {
    validate(f);
    ReductionArtifact a;
    a.mode = ReductionMode::reinforcement;
    a.n = f.num_vars;
    a.m = f.num_clauses();
    const int order = 3 * a.n + a.m + 2;

    a.roles.resize(order);
    for (int i = 1; i <= a.n; ++i) {
        a.roles[a.pos_lit(i)] = {Role::Kind::pos_lit, i};
        a.roles[a.mid(i)] = {Role::Kind::mid, i};
        a.roles[a.neg_lit(i)] = {Role::Kind::neg_lit, i};
    }
    for (int j = 1; j <= a.m; ++j) a.roles[a.clause(j)] = {Role::Kind::clause, j};
    a.roles[a.apex_x()] = {Role::Kind::x, 0};
    a.roles[a.apex_y()] = {Role::Kind::y, 0};

    std::vector<Edge> edges;
    for (int i = 1; i <= a.n; ++i) {
        edges.push_back({a.pos_lit(i), a.mid(i)});
        edges.push_back({a.pos_lit(i), a.neg_lit(i)});
        edges.push_back({a.mid(i), a.neg_lit(i)});
    }
    add_clause_edges(f, a, edges);
    for (int j = 1; j <= a.m; ++j) {
        edges.push_back({a.clause(j), a.apex_x()});
        edges.push_back({a.clause(j), a.apex_y()});
    }
    edges.push_back({a.apex_x(), a.apex_y()});
    for (int i = 1; i <= a.n; ++i) {
        edges.push_back({a.pos_lit(i), a.apex_y()});
        edges.push_back({a.neg_lit(i), a.apex_y()});
    }
    a.graph = make_graph(order, edges);
    return a;
}

ReductionArtifact build_bondage_instance(const CnfFormula& f) {
    validate(f);
    ReductionArtifact a;
    a.mode = ReductionMode::bondage;
    a.n = f.num_vars;
    a.m = f.num_clauses();
    const int order = 5 * a.n + a.m + 5;

    a.roles.resize(order);
    for (int i = 1; i <= a.n; ++i) {
        a.roles[a.pos_lit(i)] = {Role::Kind::pos_lit, i};
        a.roles[a.mid(i)] = {Role::Kind::mid, i};
        a.roles[a.neg_lit(i)] = {Role::Kind::neg_lit, i};
        a.roles[a.leaf_x(i)] = {Role::Kind::leaf_x, i};
        a.roles[a.leaf_y(i)] = {Role::Kind::leaf_y, i};
    }
    for (int j = 1; j <= a.m; ++j) a.roles[a.clause(j)] = {Role::Kind::clause, j};
    for (int k = 1; k <= 4; ++k) a.roles[a.s(k)] = {Role::Kind::s, k};
    a.roles[a.t()] = {Role::Kind::t, 0};

    std::vector<Edge> edges;
    for (int i = 1; i <= a.n; ++i) {
        edges.push_back({a.pos_lit(i), a.leaf_x(i)});
        edges.push_back({a.neg_lit(i), a.leaf_y(i)});
        edges.push_back({a.pos_lit(i), a.mid(i)});
        edges.push_back({a.mid(i), a.neg_lit(i)});
    }
    add_clause_edges(f, a, edges);
    for (int k : {1, 3, 4}) {
        for (int j = 1; j <= a.m; ++j) edges.push_back({a.clause(j), a.s(k)});
        edges.push_back(Edge::make(a.s(k), a.s(2)));
        edges.push_back({a.s(k), a.t()});
    }
    for (int i = 1; i <= a.n; ++i) {
        edges.push_back({a.pos_lit(i), a.t()});
        edges.push_back({a.neg_lit(i), a.t()});
    }
    a.graph = make_graph(order, edges);
    return a;
}

Assignment assignment_from_witness(const ReductionArtifact& a, const VertexSet& d) {
    if (d.order() != a.graph.order()) throw InputError("witness order does not match the gadget");
    Assignment f;
    f.values.resize(a.n);
    for (int i = 1; i <= a.n; ++i) {
        const bool pos = d.contains(a.pos_lit(i));
        const bool mid = d.contains(a.mid(i));
        const bool neg = d.contains(a.neg_lit(i));
        if (pos + mid + neg != 1) {
            throw InputError("gadget " + std::to_string(i) + " contributes " + std::to_string(pos + mid + neg) +
                             " of {u" + std::to_string(i) + ", v" + std::to_string(i) + ", nu" +
                             std::to_string(i) + "}, expected exactly one");
        }
        f.values[i - 1] = pos || mid;
    }
    return f;
}

std::pair<VertexSet, std::optional<Edge>> witness_from_assignment(const ReductionArtifact& a, const Assignment& f) {
    if (static_cast<int>(f.values.size()) != a.n) throw InputError("assignment does not cover every variable");
    Mask d = 0;
    for (int i = 1; i <= a.n; ++i) d |= bit(f[i] ? a.pos_lit(i) : a.neg_lit(i));
    if (a.mode == ReductionMode::reinforcement) {
        const int lit = f[1] ? a.pos_lit(1) : a.neg_lit(1);
        return {VertexSet(a.graph.order(), d), Edge::make(a.apex_x(), lit)};
    }
    for (int i = 1; i <= a.n; ++i) d |= bit(a.leaf_x(i)) | bit(a.leaf_y(i));
    d |= bit(a.s(2));
    return {VertexSet(a.graph.order(), d), std::nullopt};
}

void write_roles(std::ostream& out, const ReductionArtifact& a) {
    for (std::size_t v = 0; v < a.roles.size(); ++v) out << v << ' ' << a.roles[v].tag() << '\n';
}

void write_roles_file(const std::string& path, const ReductionArtifact& a) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write roles file '" + path + "'");
    write_roles(out, a);
}

} // namespace ocd
