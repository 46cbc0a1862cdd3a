#ifndef KTZ_GRAPH_HPP
#define KTZ_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ktz {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;
using DegreeSequence = std::vector<int>;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph on the dense vertex range 0..n-1.
///
/// Adjacency lists are kept sorted so neighbor sets compare and intersect
/// cheaply. Symmetry and the absence of loops or parallel edges are enforced
/// by every mutator.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Validating constructor: rejects out-of-range endpoints and self-loops,
    /// collapses duplicate pairs.
    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t size() const { return m_; }

    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
    bool adjacent(Vertex u, Vertex v) const;

    /// All edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    Vertex add_vertex();
    /// Returns false when the edge was already present.
    bool add_edge(Vertex u, Vertex v);
    /// Returns false when the edge was absent.
    bool remove_edge(Vertex u, Vertex v);

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_pair(Vertex u, Vertex v) const;

    std::vector<VertexSet> adj_;
    std::size_t m_ = 0;
};

Edge make_edge(Vertex u, Vertex v);

DegreeSequence degree_sequence(const Graph& g);

/// True iff every pair in `s` is adjacent. Empty and singleton sets are cliques.
bool is_clique(const Graph& g, std::span<const Vertex> s);

/// Connected components of g - removed, each sorted, ordered by least vertex.
std::vector<VertexSet> components(const Graph& g, std::span<const Vertex> removed);

struct InducedSubgraph {
    Graph graph;
    /// old id -> new id, or -1 for deleted vertices.
    std::vector<Vertex> old_to_new;
    std::vector<Vertex> new_to_old;
};

/// g - s with the surviving vertices relabeled in increasing order.
InducedSubgraph induced_delete(const Graph& g, std::span<const Vertex> s);

/// Bound on n for canonical labeling; honors KTZ_MAX_CANON, default 10.
int default_canon_bound();

/// Lexicographically least adjacency bit string over all relabelings that
/// list vertices by ascending degree. Bits run column by column over the
/// upper triangle: (0,1), (0,2), (1,2), (0,3), ...
///
/// Exponential in the size of the degree classes; twins are collapsed.
/// Throws GraphError when g has more than `bound` vertices.
std::string canonical_form(const Graph& g, int bound = default_canon_bound());

bool are_isomorphic(const Graph& g, const Graph& h, int bound = default_canon_bound());

/// Relabeling that realizes canonical_form: perm[position] = vertex.
std::vector<Vertex> canonical_labeling(const Graph& g, int bound = default_canon_bound());

/// Size of the automorphism group, by backtracking over degree classes.
std::uint64_t automorphism_count(const Graph& g, int bound = default_canon_bound());

/// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

} // namespace ktz

#endif // KTZ_GRAPH_HPP
