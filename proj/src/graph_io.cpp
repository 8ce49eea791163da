#include "ocd/graph_io.hpp"

#include "ocd/errors.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <vector>

namespace ocd {

namespace {

// Splits on single spaces and parses every field as a non-negative decimal.
std::vector<long> parse_fields(const std::string& line, int lineno) {
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t end = line.find(' ', pos);
        if (end == std::string::npos) end = line.size();
        if (end == pos) throw ParseError(lineno, "unexpected spacing");
        long value = 0;
        const char* first = line.data() + pos;
        const char* last = line.data() + end;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || *first == '-' || *first == '+') {
            throw ParseError(lineno, "expected a non-negative integer, got '" + std::string(first, last) + "'");
        }
        out.push_back(value);
        pos = end + 1;
    }
    return out;
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long n = 0;
    long m = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!have_header) {
            if (line.rfind("g ", 0) != 0) throw ParseError(lineno, "expected header 'g <n> <m>'");
            auto fields = parse_fields(line.substr(2), lineno);
            if (fields.size() != 2) throw ParseError(lineno, "header needs exactly two counts");
            n = fields[0];
            m = fields[1];
            if (n > kMaxOrder) {
                throw ParseError(lineno, "order " + std::to_string(n) + " exceeds the supported maximum " +
                                             std::to_string(kMaxOrder));
            }
            have_header = true;
            continue;
        }
        auto fields = parse_fields(line, lineno);
        if (fields.size() != 2) throw ParseError(lineno, "edge line needs exactly two vertex ids");
        long u = fields[0];
        long v = fields[1];
        if (u >= n || v >= n) throw ParseError(lineno, "vertex id out of range 0.." + std::to_string(n - 1));
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        if (u > v) throw ParseError(lineno, "endpoints must be listed as u < v");
        Edge e{static_cast<int>(u), static_cast<int>(v)};
        if (!seen.insert(e).second) throw ParseError(lineno, "duplicate edge " + e.to_string());
        edges.push_back(e);
    }
    if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing header 'g <n> <m>'");
    if (static_cast<long>(edges.size()) != m) {
        throw ParseError(lineno, "header declares " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));
    }
    return make_graph(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "g " << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write graph file '" + path + "'");
    write_edge_list(out, g);
}

} // namespace ocd
