#ifndef KTZ_KTREE_HPP
#define KTZ_KTREE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ktz/graph.hpp"

namespace ktz {

class KTreeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Removal sequence in which each vertex is k-simplicial in what remains,
/// followed by the residual K_k.
struct EliminationOrder {
    std::vector<Vertex> order;
    VertexSet base;

    friend bool operator==(const EliminationOrder&, const EliminationOrder&) = default;
};

/// A graph certified as a k-tree.
///
/// Instances come from the generators, attach_vertex, or recognize, so the
/// elimination order always replays to a valid construction.
class KTree {
public:
    const Graph& graph() const { return graph_; }
    int k() const { return k_; }
    int order() const { return graph_.order(); }
    const EliminationOrder& elimination() const { return elim_; }

    /// Wraps a graph whose elimination order was already checked by the caller.
    static KTree certified(Graph g, int k, EliminationOrder elim);

private:
    KTree(Graph g, int k, EliminationOrder elim);

    Graph graph_;
    int k_ = 0;
    EliminationOrder elim_;
};

/// Edge count of any k-tree on n vertices: C(k,2) + k(n-k).
std::size_t ktree_edge_count(int k, int n);

/// Base clique on 0..k-1; vertices k..n-1 each adjacent to exactly 0..k-1.
KTree gen_kstar(int k, int n);

/// Base clique on 0..k-1; vertex i >= k adjacent to i-1, ..., i-k.
KTree gen_kpath(int k, int n);

/// Adds one vertex adjacent to the k-clique `clique`.
KTree attach_vertex(const KTree& t, std::span<const Vertex> clique);

/// Grows K_k by attaching each new vertex to a k-clique drawn uniformly from
/// the registry of all k-cliques created so far. Samples construction
/// sequences, not unlabeled k-trees uniformly.
KTree gen_random(int k, int n, std::uint64_t seed);

/// Vertex of degree k whose neighbors form a clique, within `alive`.
bool is_k_simplicial(const Graph& g, int k, Vertex v, const std::vector<char>& alive);

struct Recognition {
    std::optional<KTree> ktree;
    /// Vertices left when no k-simplicial vertex could be removed (failure
    /// certificate); empty on success.
    VertexSet residue;
    Graph residue_graph;

    explicit operator bool() const { return ktree.has_value(); }
};

/// Greedy elimination, always removing the smallest-id k-simplicial vertex,
/// until K_k remains.
Recognition recognize(const Graph& g, int k);

/// Replays `elim` against g: each listed vertex must be k-simplicial in the
/// graph with earlier vertices removed, and the residue must be the K_k base.
bool validate_elimination(const Graph& g, int k, const EliminationOrder& elim);

enum class CliqueConvention {
    /// All k+1 vertices of a residual K_{k+1} are simplicial.
    literal,
    /// A residual K_{k+1} contributes a single vertex (the smallest id).
    single_vertex,
};

struct SimplicialLayers {
    std::vector<VertexSet> layers;
    /// What is left after peeling; K_k, or empty when the literal convention
    /// consumed a residual K_{k+1}.
    VertexSet terminal;
};

SimplicialLayers simplicial_layers(const KTree& t,
                                   CliqueConvention convention = CliqueConvention::literal);

/// All k-cliques of g in lexicographic order.
std::vector<VertexSet> k_cliques(const Graph& g, int k);

struct CutClique {
    VertexSet clique;
    int components = 0;
};

/// Every k-clique S with w(T - S) >= 2.
std::vector<CutClique> cut_kcliques(const KTree& t);

struct HyperPendant {
    VertexSet cut;
    VertexSet branch;
    Vertex tip = -1;
};

struct PendantDecomposition {
    /// No k-clique leaves three or more components: the whole graph is one
    /// hyper pendant.
    bool whole_graph = false;
    std::vector<HyperPendant> pendants;
};

/// Branches hanging off cut k-cliques with w >= 3 that contain exactly one
/// simplicial vertex. When no k-clique has w >= 3 but some (k+1)-clique does,
/// the branches around that (k+1)-clique are reported instead.
PendantDecomposition hyper_pendant_decomposition(const KTree& t);

} // namespace ktz

#endif // KTZ_KTREE_HPP
