#include "ktz/ktree.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace ktz {

KTree::KTree(Graph g, int k, EliminationOrder elim)
    : graph_(std::move(g)), k_(k), elim_(std::move(elim)) {}

KTree KTree::certified(Graph g, int k, EliminationOrder elim) {
    return KTree(std::move(g), k, std::move(elim));
}

std::size_t ktree_edge_count(int k, int n) {
    return static_cast<std::size_t>(k) * (k - 1) / 2 + static_cast<std::size_t>(k) * (n - k);
}

namespace {

void check_kn(int k, int n, const char* what) {
    if (k < 1) throw KTreeError(std::string(what) + ": k must be positive, got " + std::to_string(k));
    if (n < k) {
        throw KTreeError(std::string(what) + ": need n >= k, got n = " + std::to_string(n) +
                         ", k = " + std::to_string(k));
    }
}

Graph base_clique(int k, int n) {
    Graph g(n);
    for (Vertex u = 0; u < k; ++u) {
        for (Vertex v = u + 1; v < k; ++v) g.add_edge(u, v);
    }
    return g;
}

VertexSet iota_set(int from, int to) {
    VertexSet s;
    for (Vertex v = from; v < to; ++v) s.push_back(v);
    return s;
}

// Vertices k..n-1 were attached in increasing order, so they eliminate in
// decreasing order onto the base 0..k-1.
EliminationOrder reverse_growth_order(int k, int n) {
    EliminationOrder e;
    for (Vertex v = n - 1; v >= k; --v) e.order.push_back(v);
    e.base = iota_set(0, k);
    return e;
}

int alive_count(const std::vector<char>& alive) {
    return static_cast<int>(std::count(alive.begin(), alive.end(), 1));
}

} // namespace

KTree gen_kstar(int k, int n) {
    check_kn(k, n, "gen_kstar");
    Graph g = base_clique(k, n);
    for (Vertex v = k; v < n; ++v) {
        for (Vertex b = 0; b < k; ++b) g.add_edge(v, b);
    }
    return KTree::certified(std::move(g), k, reverse_growth_order(k, n));
}

KTree gen_kpath(int k, int n) {
    check_kn(k, n, "gen_kpath");
    Graph g = base_clique(k, n);
    for (Vertex v = k; v < n; ++v) {
        for (Vertex b = v - k; b < v; ++b) g.add_edge(v, b);
    }
    return KTree::certified(std::move(g), k, reverse_growth_order(k, n));
}

KTree attach_vertex(const KTree& t, std::span<const Vertex> clique) {
    const Graph& g = t.graph();
    VertexSet c(clique.begin(), clique.end());
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (static_cast<int>(c.size()) != t.k()) {
        throw KTreeError("attach_vertex: clique has " + std::to_string(c.size()) +
                         " vertices, need k = " + std::to_string(t.k()));
    }
    for (Vertex v : c) {
        if (v < 0 || v >= g.order()) {
            throw KTreeError("attach_vertex: vertex " + std::to_string(v) + " out of range");
        }
    }
    if (!is_clique(g, c)) throw KTreeError("attach_vertex: given vertex set is not a clique");

    Graph h = g;
    Vertex nv = h.add_vertex();
    for (Vertex v : c) h.add_edge(nv, v);
    EliminationOrder e = t.elimination();
    e.order.insert(e.order.begin(), nv);
    return KTree::certified(std::move(h), t.k(), std::move(e));
}

KTree gen_random(int k, int n, std::uint64_t seed) {
    check_kn(k, n, "gen_random");
    std::mt19937_64 rng(seed);
    Graph g = base_clique(k, n);
    std::vector<VertexSet> registry{iota_set(0, k)};
    EliminationOrder e;
    e.base = iota_set(0, k);
    for (Vertex v = k; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, registry.size() - 1);
        const VertexSet c = registry[pick(rng)];
        for (Vertex b : c) g.add_edge(v, b);
        for (Vertex drop : c) {
            VertexSet nc;
            for (Vertex b : c) {
                if (b != drop) nc.push_back(b);
            }
            nc.push_back(v);
            registry.push_back(std::move(nc));
        }
        e.order.insert(e.order.begin(), v);
    }
    return KTree::certified(std::move(g), k, std::move(e));
}

bool is_k_simplicial(const Graph& g, int k, Vertex v, const std::vector<char>& alive) {
    VertexSet nb;
    for (Vertex w : g.neighbors(v)) {
        if (alive[w]) {
            nb.push_back(w);
            if (static_cast<int>(nb.size()) > k) return false;
        }
    }
    return static_cast<int>(nb.size()) == k && is_clique(g, nb);
}

Recognition recognize(const Graph& g, int k) {
    const int n = g.order();
    Recognition r;
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    EliminationOrder e;

    auto fail = [&]() {
        for (Vertex v = 0; v < n; ++v) {
            if (alive[v]) r.residue.push_back(v);
        }
        std::vector<Vertex> dead;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[v]) dead.push_back(v);
        }
        r.residue_graph = induced_delete(g, dead).graph;
        return r;
    };

    if (k < 1 || n < k) return fail();
    int remaining = n;
    while (remaining > k) {
        Vertex found = -1;
        for (Vertex v = 0; v < n && found < 0; ++v) {
            if (alive[v] && is_k_simplicial(g, k, v, alive)) found = v;
        }
        if (found < 0) return fail();
        e.order.push_back(found);
        alive[found] = 0;
        --remaining;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (alive[v]) e.base.push_back(v);
    }
    if (!is_clique(g, e.base)) return fail();
    r.ktree = KTree::certified(g, k, std::move(e));
    return r;
}

bool validate_elimination(const Graph& g, int k, const EliminationOrder& elim) {
    const int n = g.order();
    if (k < 1 || static_cast<int>(elim.order.size()) + static_cast<int>(elim.base.size()) != n) {
        return false;
    }
    if (static_cast<int>(elim.base.size()) != k) return false;
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<char> listed(static_cast<std::size_t>(n), 0);
    for (Vertex v : elim.order) {
        if (v < 0 || v >= n || listed[v]) return false;
        listed[v] = 1;
        if (!is_k_simplicial(g, k, v, alive)) return false;
        alive[v] = 0;
    }
    for (Vertex v : elim.base) {
        if (v < 0 || v >= n || listed[v]) return false;
        listed[v] = 1;
    }
    return is_clique(g, elim.base);
}

SimplicialLayers simplicial_layers(const KTree& t, CliqueConvention convention) {
    const Graph& g = t.graph();
    const int n = g.order();
    const int k = t.k();
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    SimplicialLayers out;
    for (;;) {
        const int remaining = alive_count(alive);
        if (remaining <= k) break;
        VertexSet layer;
        if (remaining == k + 1) {
            for (Vertex v = 0; v < n; ++v) {
                if (alive[v]) layer.push_back(v);
            }
            if (convention == CliqueConvention::single_vertex) layer.resize(1);
        } else {
            for (Vertex v = 0; v < n; ++v) {
                if (alive[v] && is_k_simplicial(g, k, v, alive)) layer.push_back(v);
            }
        }
        for (Vertex v : layer) alive[v] = 0;
        out.layers.push_back(std::move(layer));
    }
    for (Vertex v = 0; v < n; ++v) {
        if (alive[v]) out.terminal.push_back(v);
    }
    return out;
}

std::vector<VertexSet> k_cliques(const Graph& g, int k) {
    std::vector<VertexSet> out;
    if (k <= 0) return out;
    VertexSet cur;
    auto rec = [&](auto&& self, Vertex start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (Vertex v = start; v < g.order(); ++v) {
            bool ok = true;
            for (Vertex u : cur) {
                if (!g.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<CutClique> cut_kcliques(const KTree& t) {
    std::vector<CutClique> out;
    for (auto& s : k_cliques(t.graph(), t.k())) {
        const int w = static_cast<int>(components(t.graph(), s).size());
        if (w >= 2) out.push_back({std::move(s), w});
    }
    return out;
}

namespace {

VertexSet first_layer(const KTree& t) {
    auto layers = simplicial_layers(t);
    return layers.layers.empty() ? VertexSet{} : layers.layers.front();
}

void collect_pendants(const Graph& g, const VertexSet& cut, const VertexSet& s1,
                      std::vector<HyperPendant>& out) {
    for (auto& comp : components(g, cut)) {
        Vertex tip = -1;
        int hits = 0;
        for (Vertex v : comp) {
            if (std::binary_search(s1.begin(), s1.end(), v)) {
                tip = v;
                ++hits;
            }
        }
        if (hits == 1) out.push_back({cut, std::move(comp), tip});
    }
}

} // namespace

PendantDecomposition hyper_pendant_decomposition(const KTree& t) {
    const Graph& g = t.graph();
    const VertexSet s1 = first_layer(t);
    PendantDecomposition d;

    bool branching = false;
    for (const auto& cc : cut_kcliques(t)) {
        if (cc.components < 3) continue;
        branching = true;
        collect_pendants(g, cc.clique, s1, d.pendants);
    }
    if (branching) return d;

    for (const auto& big : k_cliques(g, t.k() + 1)) {
        if (components(g, big).size() < 3) continue;
        branching = true;
        collect_pendants(g, big, s1, d.pendants);
    }
    d.whole_graph = !branching;
    return d;
}

} // namespace ktz
