#include "ktz/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ktz {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

[[noreturn]] void fail(int lineno, const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
}

} // namespace

EdgeListFile read_edge_list(std::istream& in) {
    EdgeListFile f;
    bool have_header = false;
    int n = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            std::istringstream cs(line.substr(hash + 1));
            std::string tag;
            if (cs >> tag && tag == "elim:") {
                std::vector<Vertex> order;
                Vertex v;
                while (cs >> v) order.push_back(v);
                f.elim = std::move(order);
            }
        }
        const std::string body = strip_comment(line);
        if (blank(body)) continue;

        std::istringstream ls(body);
        long long a = 0, b = 0;
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra)) fail(lineno, "expected two integers");
        if (!have_header) {
            if (a < 0 || a > 1'000'000) fail(lineno, "vertex count " + std::to_string(a) + " out of range");
            if (b < 0) fail(lineno, "k must be nonnegative");
            n = static_cast<int>(a);
            f.k = static_cast<int>(b);
            f.graph = Graph(n);
            have_header = true;
            continue;
        }
        for (long long x : {a, b}) {
            if (x < 0 || x >= n) fail(lineno, "vertex " + std::to_string(x) + " out of range");
        }
        if (a == b) fail(lineno, "self-loop on vertex " + std::to_string(a));
        f.graph.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (!have_header) throw ParseError("line " + std::to_string(lineno + 1) + ": missing \"n k\" header");
    return f;
}

EdgeListFile read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, int k) {
    out << g.order() << ' ' << k << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_ktree(std::ostream& out, const KTree& t) {
    write_edge_list(out, t.graph(), t.k());
    out << "# elim:";
    for (Vertex v : t.elimination().order) out << ' ' << v;
    for (Vertex v : t.elimination().base) out << ' ' << v;
    out << '\n';
}

void write_dot(std::ostream& out, const Graph& g, const std::string& name) {
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

} // namespace ktz
