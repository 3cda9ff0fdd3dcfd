#include "iscount/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "iscount/errors.hpp"

namespace iscount {

namespace {

[[noreturn]] void fail(long line, const std::string& msg) {
    throw input_error("line " + std::to_string(line) + ": " + msg);
}

bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t i = 0;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    try {
        out = std::stoll(tok);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    long lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = split_ws(line);
        if (toks.empty()) fail(lineno, "blank line");
        if (toks[0] == "c") continue;
        if (n < 0) {
            if (toks.size() != 4 || toks[0] != "p" || toks[1] != "is")
                fail(lineno, "expected problem line 'p is <n> <m>'");
            if (!parse_int(toks[2], n) || !parse_int(toks[3], m))
                fail(lineno, "non-numeric vertex or edge count");
            continue;
        }
        if (toks[0] != "e") fail(lineno, "expected edge line 'e <u> <v>'");
        if (toks.size() != 3) fail(lineno, "edge line needs exactly two endpoints");
        long long u, v;
        if (!parse_int(toks[1], u) || !parse_int(toks[2], v))
            fail(lineno, "non-numeric edge endpoint");
        if (u < 1 || v > n || u >= v)
            fail(lineno, "edge endpoints must satisfy 1 <= u < v <= n");
        if (static_cast<long long>(edges.size()) == m) fail(lineno, "more edges than declared");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw input_error("line 1: missing problem line 'p is <n> <m>'");
    if (static_cast<long long>(edges.size()) != m)
        throw input_error("declared " + std::to_string(m) + " edges but found " +
                          std::to_string(edges.size()));
    try {
        return Graph::from_edges(static_cast<int>(n), edges);
    } catch (const input_error& e) {
        throw input_error(std::string("graph construction: ") + e.what());
    }
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream iss(text);
    return parse_graph(iss);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file '" + path + "'");
    return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
    int n = g.max_vertex_id();
    if (n != g.num_vertices())
        throw precondition_error("serialize_graph: vertex ids must be exactly 1..n");
    std::ostringstream out;
    out << "p is " << n << " " << g.num_edges() << "\n";
    for (int u = 1; u <= n; ++u)
        for (int v : g.neighbors(u))
            if (u < v) out << "e " << u << " " << v << "\n";
    return out.str();
}

}  // namespace iscount
