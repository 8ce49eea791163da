#pragma once

#include "ocd/cnf.hpp"
#include "ocd/graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ocd {

enum class ReductionMode { reinforcement, bondage };

ReductionMode parse_mode(const std::string& name);
std::string to_string(ReductionMode mode);

// What a gadget vertex stands for. `index` is the 1-based variable, clause or S index;
// it is 0 for the apex roles X, Y and T.
struct Role {
    enum class Kind { pos_lit, neg_lit, mid, leaf_x, leaf_y, clause, x, y, s, t };

    Kind kind = Kind::x;
    int index = 0;

    bool operator==(const Role&) const = default;

    // Sidecar tag: u<i>, nu<i>, v<i>, x<i>, y<i>, c<j>, x, y, s1..s4, t.
    std::string tag() const;
};

// A gadget graph plus the role of every vertex.
//
// Reinforcement layout: (u_i, v_i, nu_i) for i = 1..n, then c_1..c_m, then x, then y.
// Bondage layout: (u_i, v_i, nu_i, x_i, y_i) for i = 1..n, then c_1..c_m, s_1..s_4, t.
struct ReductionArtifact {
    ReductionMode mode = ReductionMode::reinforcement;
    int n = 0;
    int m = 0;
    Graph graph;
    std::vector<Role> roles;

    int pos_lit(int i) const;
    int neg_lit(int i) const;
    int mid(int i) const;
    int leaf_x(int i) const;  // bondage only
    int leaf_y(int i) const;  // bondage only
    int clause(int j) const;
    int apex_x() const;       // reinforcement only
    int apex_y() const;       // reinforcement only
    int s(int k) const;       // bondage only, k in 1..4
    int t() const;            // bondage only
};

// Triangle per variable, clause vertices wired to their literals, and apexes x, y
// (x to every clause, y to every clause, literal and x). 3n+m+2 vertices, 5n+5m+1 edges.
ReductionArtifact build_reinforcement_instance(const CnfFormula& f);

// Path x_i-u_i-v_i-nu_i-y_i per variable, clause vertices wired to their literals, the
// set S = {s_1..s_4} and apex t. 5n+m+5 vertices, 6n+6m+6 edges.
ReductionArtifact build_bondage_instance(const CnfFormula& f);

// Truth assignment encoded by a witness: variable i is true if u_i or v_i is chosen and
// false if nu_i is. Each gadget must contribute exactly one of u_i, v_i, nu_i (leaves are
// ignored in bondage mode); otherwise InputError names the first offending gadget.
Assignment assignment_from_witness(const ReductionArtifact& a, const VertexSet& d);

// Candidate witness built from an assignment. Reinforcement: the true literal vertices and
// the non-edge {x, l} where l is the true literal of variable 1. Bondage: true literal
// vertices, every leaf, and s_2.
std::pair<VertexSet, std::optional<Edge>> witness_from_assignment(const ReductionArtifact& a, const Assignment& f);

// Roles sidecar: one '<vertex-id> <role-tag>' line per vertex.
void write_roles(std::ostream& out, const ReductionArtifact& a);
void write_roles_file(const std::string& path, const ReductionArtifact& a);

} // namespace ocd
