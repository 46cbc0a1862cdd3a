#include "ktz/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>

namespace ktz {

Graph::Graph(int n) : adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) {
        throw GraphError("vertex count must be nonnegative, got " + std::to_string(n));
    }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             "): endpoint out of range for n = " + std::to_string(n));
        }
        if (u == v) {
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             "): self-loop");
        }
        g.add_edge(u, v);
    }
    return g;
}

void Graph::check_pair(Vertex u, Vertex v) const {
    if (u < 0 || u >= order() || v < 0 || v >= order()) {
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         "): endpoint out of range for n = " + std::to_string(order()));
    }
    if (u == v) {
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + "): self-loop");
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Vertex Graph::add_vertex() {
    adj_.emplace_back();
    return order() - 1;
}

bool Graph::add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it != a.end() && *it == v) return false;
    a.insert(it, v);
    auto& b = adj_[v];
    b.insert(std::lower_bound(b.begin(), b.end(), u), u);
    ++m_;
    return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it == a.end() || *it != v) return false;
    a.erase(it);
    auto& b = adj_[v];
    b.erase(std::lower_bound(b.begin(), b.end(), u));
    --m_;
    return true;
}

Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence d(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
    return d;
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (!g.adjacent(s[i], s[j])) return false;
        }
    }
    return true;
}

std::vector<VertexSet> components(const Graph& g, std::span<const Vertex> removed) {
    const int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex v : removed) seen[v] = 1;
    std::vector<VertexSet> out;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::queue<Vertex> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

InducedSubgraph induced_delete(const Graph& g, std::span<const Vertex> s) {
    InducedSubgraph r;
    r.old_to_new.assign(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : s) r.old_to_new[v] = -1;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (r.old_to_new[v] == -1) continue;
        r.old_to_new[v] = static_cast<Vertex>(r.new_to_old.size());
        r.new_to_old.push_back(v);
    }
    r.graph = Graph(static_cast<int>(r.new_to_old.size()));
    for (const auto& [u, v] : g.edges()) {
        if (r.old_to_new[u] >= 0 && r.old_to_new[v] >= 0) {
            r.graph.add_edge(r.old_to_new[u], r.old_to_new[v]);
        }
    }
    return r;
}

int default_canon_bound() {
    if (const char* env = std::getenv("KTZ_MAX_CANON")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 64) return static_cast<int>(v);
    }
    return 10;
}

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        for (Vertex w : g.neighbors(v)) adj[v] |= bit(w);
    }
    return adj;
}

void check_bound(const Graph& g, int bound, const char* what) {
    if (g.order() > bound || g.order() > 64) {
        throw GraphError(std::string(what) + ": n = " + std::to_string(g.order()) +
                         " exceeds canonicalization bound " + std::to_string(std::min(bound, 64)) +
                         " (KTZ_MAX_CANON)");
    }
}

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g)
        : n_(g.order()), adj_(adjacency_masks(g)), deg_(degree_sequence(g)),
          twin_(static_cast<std::size_t>(n_), 0), perm_(static_cast<std::size_t>(n_), -1) {
        slot_degree_ = deg_;
        std::sort(slot_degree_.begin(), slot_degree_.end());
        for (Vertex a = 0; a < n_; ++a) {
            for (Vertex b = 0; b < n_; ++b) {
                if (a != b && (adj_[a] & ~bit(b)) == (adj_[b] & ~bit(a))) twin_[a] |= bit(b);
            }
        }
        cur_.assign(static_cast<std::size_t>(n_ * (n_ - 1) / 2), '0');
    }

    void run() {
        if (n_ == 0) {
            have_best_ = true;
            return;
        }
        extend(0, true);
    }

    const std::string& best() const { return best_; }
    const std::vector<Vertex>& best_perm() const { return best_perm_; }

private:
    // `less`: prefix of positions [0, p) is already strictly below best.
    void extend(int p, bool less) {
        if (p == n_) {
            if (!have_best_ || less) {
                best_ = cur_;
                best_perm_ = perm_;
                have_best_ = true;
                ++updates_;
            }
            return;
        }
        Mask tried = 0;
        const auto off = static_cast<std::size_t>(p * (p - 1) / 2);
        for (Vertex v = 0; v < n_; ++v) {
            if ((used_ & bit(v)) || deg_[v] != slot_degree_[p]) continue;
            if (tried & twin_[v]) continue;
            tried |= bit(v);

            bool l = less || !have_best_;
            bool prune = false;
            for (int i = 0; i < p; ++i) {
                char b = (adj_[perm_[i]] & bit(v)) ? '1' : '0';
                cur_[off + i] = b;
                if (!l) {
                    if (b > best_[off + i]) {
                        prune = true;
                        break;
                    }
                    if (b < best_[off + i]) l = true;
                }
            }
            if (prune) continue;

            perm_[p] = v;
            used_ |= bit(v);
            const auto before = updates_;
            extend(p + 1, l);
            used_ &= ~bit(v);
            // A new best shares our prefix, so the prefix is no longer below it.
            if (updates_ != before) less = false;
        }
    }

    int n_;
    std::vector<Mask> adj_;
    std::vector<int> deg_;
    std::vector<int> slot_degree_;
    std::vector<Mask> twin_;
    std::vector<Vertex> perm_;
    Mask used_ = 0;
    std::string cur_;
    std::string best_;
    std::vector<Vertex> best_perm_;
    bool have_best_ = false;
    std::uint64_t updates_ = 0;
};

} // namespace

std::string canonical_form(const Graph& g, int bound) {
    check_bound(g, bound, "canonical_form");
    CanonSearch s(g);
    s.run();
    return s.best();
}

std::vector<Vertex> canonical_labeling(const Graph& g, int bound) {
    check_bound(g, bound, "canonical_labeling");
    CanonSearch s(g);
    s.run();
    return s.best_perm();
}

bool are_isomorphic(const Graph& g, const Graph& h, int bound) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    auto dg = degree_sequence(g);
    auto dh = degree_sequence(h);
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return canonical_form(g, bound) == canonical_form(h, bound);
}

std::uint64_t automorphism_count(const Graph& g, int bound) {
    check_bound(g, bound, "automorphism_count");
    const int n = g.order();
    const auto adj = adjacency_masks(g);
    std::vector<Vertex> image(static_cast<std::size_t>(n), -1);
    Mask used = 0;
    std::uint64_t count = 0;

    auto rec = [&](auto&& self, Vertex v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (Vertex w = 0; w < n; ++w) {
            if ((used & bit(w)) || g.degree(w) != g.degree(v)) continue;
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u) {
                ok = (((adj[u] >> v) & 1) == ((adj[image[u]] >> w) & 1));
            }
            if (!ok) continue;
            image[v] = w;
            used |= bit(w);
            self(self, v + 1);
            used &= ~bit(w);
        }
    };
    rec(rec, 0);
    return count;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    Graph h(g.order());
    for (const auto& [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

} // namespace ktz
