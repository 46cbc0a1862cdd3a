#include "ktz/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <ostream>
#include <unordered_set>

#include <json.hpp>

namespace ktz {

std::string to_string(CensusMethod m) {
    switch (m) {
    case CensusMethod::growth: return "growth";
    case CensusMethod::filter: return "filter";
    case CensusMethod::canonical_growth: return "canonical_growth";
    }
    return "?";
}

std::uint64_t edge_bit(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return std::uint64_t{1} << (v * (v - 1) / 2 + u);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if (mask & edge_bit(u, v)) g.add_edge(u, v);
        }
    }
    return g;
}

std::uint64_t mask_from_graph(const Graph& g) {
    std::uint64_t m = 0;
    for (const auto& [u, v] : g.edges()) m |= edge_bit(u, v);
    return m;
}

namespace {

void check_labeled_kn(int k, int n, const char* what) {
    if (k < 1 || n < k) {
        throw EnumerationError(std::string(what) + ": need n >= k >= 1, got k = " + std::to_string(k) +
                               ", n = " + std::to_string(n));
    }
    if (n > kMaxLabeledN) {
        throw EnumerationError(std::string(what) + ": n = " + std::to_string(n) +
                               " exceeds the labeled census limit " + std::to_string(kMaxLabeledN));
    }
}

struct State {
    std::uint32_t vertices;
    std::uint64_t edges;
    bool operator==(const State&) const = default;
};

struct StateHash {
    std::size_t operator()(const State& s) const {
        std::uint64_t h = s.edges * 0x9E3779B97F4A7C15ULL;
        h ^= (static_cast<std::uint64_t>(s.vertices) + 0x7F4A7C15ULL) + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// k-cliques inside `vertices`, as vertex masks.
std::vector<std::uint32_t> cliques_in(int n, std::uint32_t vertices, std::uint64_t edges, int k) {
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if (edges & edge_bit(u, v)) {
                nbr[u] |= 1u << v;
                nbr[v] |= 1u << u;
            }
        }
    }
    std::vector<std::uint32_t> out;
    auto rec = [&](auto&& self, std::uint32_t chosen, std::uint32_t candidates, int need) -> void {
        if (need == 0) {
            out.push_back(chosen);
            return;
        }
        while (candidates) {
            const int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            self(self, chosen | (1u << v), candidates & nbr[v], need - 1);
        }
    };
    rec(rec, 0u, vertices, k);
    return out;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// C(a, b), saturating at UINT64_MAX.
std::uint64_t binomial_saturating(int a, int b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    unsigned __int128 r = 1;
    for (int i = 1; i <= b; ++i) {
        r = r * static_cast<unsigned>(a - b + i) / static_cast<unsigned>(i);
        if (r > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(r);
}

KTree canonical_ktree(const Graph& g, int k, int bound) {
    const auto perm = canonical_labeling(g, bound);
    std::vector<Vertex> new_id(perm.size());
    for (std::size_t pos = 0; pos < perm.size(); ++pos) new_id[perm[pos]] = static_cast<Vertex>(pos);
    auto rec = recognize(relabel(g, new_id), k);
    if (!rec) throw std::logic_error("canonical relabeling of a k-tree failed recognition");
    return std::move(*rec.ktree);
}

} // namespace

EnumerationReport enumerate_labeled_growth(int k, int n, std::uint64_t bound) {
    check_labeled_kn(k, n, "enumerate_labeled_growth");
    EnumerationReport r;
    r.k = k;
    r.n = n;
    r.method = CensusMethod::growth;

    std::unordered_set<State, StateHash> level;
    for (std::uint32_t vs = 0; vs < (1u << n); ++vs) {
        if (std::popcount(vs) != k) continue;
        std::uint64_t e = 0;
        for (Vertex v = 0; v < n; ++v) {
            for (Vertex u = 0; u < v; ++u) {
                if ((vs >> u & 1u) && (vs >> v & 1u)) e |= edge_bit(u, v);
            }
        }
        level.insert({vs, e});
    }
    const std::uint32_t all = (1u << n) - 1u;
    for (int size = k; size < n; ++size) {
        std::unordered_set<State, StateHash> next;
        for (const auto& s : level) {
            const auto cliques = cliques_in(n, s.vertices, s.edges, k);
            for (Vertex v = 0; v < n; ++v) {
                if (s.vertices >> v & 1u) continue;
                for (std::uint32_t c : cliques) {
                    std::uint64_t e = s.edges;
                    for (std::uint32_t cc = c; cc; cc &= cc - 1) e |= edge_bit(v, std::countr_zero(cc));
                    next.insert({s.vertices | (1u << v), e});
                }
            }
            if (next.size() > bound) {
                throw EnumerationError("enumerate_labeled_growth: more than " + std::to_string(bound) +
                                       " labeled graphs at size " + std::to_string(size + 1) +
                                       " (labeled bound)");
            }
        }
        level = std::move(next);
    }
    for (const auto& s : level) {
        if (s.vertices == all) r.labeled.push_back(s.edges);
    }
    std::sort(r.labeled.begin(), r.labeled.end());
    r.labeled_count = r.labeled.size();
    return r;
}

EnumerationReport enumerate_labeled_filter(int k, int n, std::uint64_t budget) {
    check_labeled_kn(k, n, "enumerate_labeled_filter");
    EnumerationReport r;
    r.k = k;
    r.n = n;
    r.method = CensusMethod::filter;

    const int pairs = n * (n - 1) / 2;
    const int m = static_cast<int>(ktree_edge_count(k, n));
    const std::uint64_t candidates = binomial_saturating(pairs, m);
    if (candidates > budget) {
        throw EnumerationError("enumerate_labeled_filter: " + std::to_string(candidates) +
                               " candidate edge sets exceed the budget " + std::to_string(budget));
    }
    if (m == 0) {
        if (recognize(Graph(n), k)) r.labeled.push_back(0);
    } else {
        const std::uint64_t limit = std::uint64_t{1} << pairs;
        std::uint64_t x = (std::uint64_t{1} << m) - 1;
        while (x < limit) {
            if (recognize(graph_from_mask(n, x), k)) r.labeled.push_back(x);
            // Next mask with the same popcount.
            const std::uint64_t low = x & (~x + 1);
            const std::uint64_t ripple = x + low;
            if (ripple == 0) break;
            x = ripple | (((x ^ ripple) >> 2) / low);
        }
    }
    r.labeled_count = r.labeled.size();
    return r;
}

EnumerationReport unlabeled_representatives(const EnumerationReport& report, int bound) {
    EnumerationReport r = report;
    std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> classes; // canon -> (first mask, count)
    for (std::uint64_t mask : report.labeled) {
        auto canon = canonical_form(graph_from_mask(report.n, mask), bound);
        auto [it, fresh] = classes.try_emplace(std::move(canon), mask, 0);
        ++it->second.second;
    }
    r.representatives.clear();
    r.canonical.clear();
    r.class_sizes.clear();
    for (const auto& [canon, info] : classes) {
        r.representatives.push_back(canonical_ktree(graph_from_mask(report.n, info.first), report.k, bound));
        r.canonical.push_back(canon);
        r.class_sizes.push_back(info.second);
    }
    r.unlabeled_count = classes.size();
    return r;
}

EnumerationReport enumerate_unlabeled(int k, int n, int bound) {
    if (k < 1 || n < k) {
        throw EnumerationError("enumerate_unlabeled: need n >= k >= 1, got k = " + std::to_string(k) +
                               ", n = " + std::to_string(n));
    }
    if (n > bound) {
        throw EnumerationError("enumerate_unlabeled: n = " + std::to_string(n) +
                               " exceeds canonicalization bound " + std::to_string(bound) +
                               " (KTZ_MAX_CANON)");
    }
    std::map<std::string, Graph> level;
    {
        const KTree base = gen_kpath(k, k);
        level.emplace(canonical_form(base.graph(), bound), base.graph());
    }
    for (int size = k; size < n; ++size) {
        std::map<std::string, Graph> next;
        for (const auto& [canon, g] : level) {
            for (const auto& c : k_cliques(g, k)) {
                Graph h = g;
                const Vertex v = h.add_vertex();
                for (Vertex b : c) h.add_edge(v, b);
                auto key = canonical_form(h, bound);
                next.try_emplace(std::move(key), std::move(h));
            }
        }
        level = std::move(next);
    }

    EnumerationReport r;
    r.k = k;
    r.n = n;
    r.method = CensusMethod::canonical_growth;
    const std::uint64_t nfact = factorial(n);
    for (const auto& [canon, g] : level) {
        r.representatives.push_back(canonical_ktree(g, k, bound));
        r.canonical.push_back(canon);
        const std::uint64_t orbit = nfact / automorphism_count(g, bound);
        r.class_sizes.push_back(orbit);
        r.labeled_count += orbit;
    }
    r.unlabeled_count = r.representatives.size();
    return r;
}

ExtremalScan extremal_scan(const EnumerationReport& census, const IndexParams& params) {
    if (census.representatives.empty()) {
        throw EnumerationError("extremal_scan: census has no representatives");
    }
    ExtremalScan s;
    s.params = params;
    for (std::size_t i = 0; i < census.representatives.size(); ++i) {
        s.values.push_back({i, index_value(census.representatives[i].graph(), params, EvalMode::both)});
    }
    for (std::size_t i = 1; i < s.values.size(); ++i) {
        if (compare_values(s.values[i].value, s.values[s.argmin].value) < 0) s.argmin = i;
        if (compare_values(s.values[i].value, s.values[s.argmax].value) > 0) s.argmax = i;
    }
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        for (std::size_t j = i + 1; j < s.values.size(); ++j) {
            if (compare_values(s.values[i].value, s.values[j].value) == 0) s.ties.emplace_back(i, j);
        }
    }
    for (const auto& [i, j] : s.ties) {
        if (i == s.argmin || j == s.argmin) s.min_unique = false;
        if (i == s.argmax || j == s.argmax) s.max_unique = false;
    }
    return s;
}

int find_class(const EnumerationReport& census, const Graph& g, int bound) {
    const auto canon = canonical_form(g, bound);
    for (std::size_t i = 0; i < census.canonical.size(); ++i) {
        if (census.canonical[i] == canon) return static_cast<int>(i);
    }
    return -1;
}

void write_census(std::ostream& out, const EnumerationReport& r) {
    for (const auto& t : r.representatives) {
        out << r.n << ' ' << r.k << " |";
        bool first = true;
        for (const auto& [u, v] : t.graph().edges()) {
            out << (first ? " " : ",") << u << '-' << v;
            first = false;
        }
        out << '\n';
    }
}

std::string census_summary_json(const EnumerationReport& r) {
    nlohmann::ordered_json j;
    j["k"] = r.k;
    j["n"] = r.n;
    j["labeled"] = r.labeled_count;
    j["unlabeled"] = r.unlabeled_count;
    j["method"] = to_string(r.method);
    return j.dump();
}

} // namespace ktz
