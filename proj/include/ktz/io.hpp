#ifndef KTZ_IO_HPP
#define KTZ_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "ktz/graph.hpp"
#include "ktz/ktree.hpp"

namespace ktz {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Contents of an edge-list file: header "n k", one "u v" pair per line,
/// '#' starts a comment. A "# elim: a b c" comment carries an elimination
/// order.
struct EdgeListFile {
    Graph graph;
    int k = 0;
    std::optional<std::vector<Vertex>> elim;
};

EdgeListFile read_edge_list(std::istream& in);
EdgeListFile read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g, int k);
/// Edge list plus the "# elim:" line (order followed by the base clique).
void write_ktree(std::ostream& out, const KTree& t);

void write_dot(std::ostream& out, const Graph& g, const std::string& name = "G");

} // namespace ktz

#endif // KTZ_IO_HPP
