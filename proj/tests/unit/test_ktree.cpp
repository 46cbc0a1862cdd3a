#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "ktz/ktree.hpp"
#include "oracles.hpp"

using namespace ktz;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < v; ++u) g.add_edge(u, v);
    }
    return g;
}

// Central triangle 0,1,2 with apexes 3, 4, 5 on its three edges.
KTree triangle_with_apexes() {
    KTree t = gen_kpath(2, 3);
    t = attach_vertex(t, VertexSet{0, 1});
    t = attach_vertex(t, VertexSet{1, 2});
    return attach_vertex(t, VertexSet{0, 2});
}

} // namespace

TEST_SUITE("ktree") {

TEST_CASE("k-star construction") {
    CHECK(degree_sequence(gen_kstar(1, 5).graph()) == DegreeSequence{4, 1, 1, 1, 1});
    CHECK(degree_sequence(gen_kstar(2, 5).graph()) == DegreeSequence{4, 4, 2, 2, 2});
    CHECK(gen_kstar(3, 3).graph() == complete(3));
    CHECK_THROWS_AS(gen_kstar(3, 2), KTreeError);
}

TEST_CASE("k-path construction") {
    CHECK(degree_sequence(gen_kpath(2, 6).graph()) == DegreeSequence{2, 3, 4, 4, 3, 2});
    CHECK(degree_sequence(gen_kpath(2, 4).graph()) == DegreeSequence{2, 3, 3, 2});
    for (int k = 1; k <= 5; ++k) CHECK(gen_kpath(k, k + 1).graph() == complete(k + 1));
    CHECK_THROWS_AS(gen_kpath(4, 3), KTreeError);
    // For k = 1 these are the ordinary path and star.
    for (int n = 3; n <= 9; ++n) {
        const auto p = degree_sequence(gen_kpath(1, n).graph());
        CHECK(std::count(p.begin(), p.end(), 1) == 2);
        CHECK(std::count(p.begin(), p.end(), 2) == n - 2);
        const auto s = degree_sequence(gen_kstar(1, n).graph());
        CHECK(s[0] == n - 1);
        CHECK(std::count(s.begin(), s.end(), 1) == n - 1);
    }
}

TEST_CASE("attach_vertex") {
    auto t = attach_vertex(gen_kpath(2, 2), VertexSet{0, 1});
    CHECK(t.graph() == complete(3));
    auto u = attach_vertex(attach_vertex(gen_kpath(2, 3), VertexSet{1, 2}), VertexSet{1, 3});
    auto d = degree_sequence(u.graph());
    std::sort(d.begin(), d.end());
    CHECK(d == DegreeSequence{2, 2, 3, 3, 4});
    CHECK(oracle::isomorphic(u.graph(), gen_kpath(2, 5).graph()));
    CHECK(validate_elimination(u.graph(), 2, u.elimination()));
    CHECK_THROWS_AS(attach_vertex(gen_kstar(2, 5), VertexSet{2, 3}), KTreeError);
    CHECK_THROWS_AS(attach_vertex(gen_kstar(2, 5), VertexSet{0}), KTreeError);
}

TEST_CASE("random growth") {
    for (std::uint64_t s = 0; s < 5; ++s) CHECK(gen_random(2, 3, s).graph() == complete(3));
    CHECK(gen_random(2, 50, 7).graph() == gen_random(2, 50, 7).graph());
    CHECK(gen_random(2, 50, 7).graph() != gen_random(2, 50, 8).graph());
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto t = gen_random(3, 10, s);
        CHECK(t.graph().size() == 24);
        CHECK(recognize(t.graph(), 3));
    }
}

TEST_CASE("recognition") {
    CHECK(recognize(gen_kpath(3, 7).graph(), 3));
    Graph c4(4);
    for (int v = 0; v < 4; ++v) c4.add_edge(v, (v + 1) % 4);
    auto r = recognize(c4, 2);
    CHECK_FALSE(r);
    CHECK(r.residue == VertexSet{0, 1, 2, 3});
    CHECK_FALSE(recognize(complete(4), 2));
    CHECK(recognize(complete(4), 3));

    // Wrong k on a genuine k-tree fails too.
    CHECK_FALSE(recognize(gen_kpath(2, 7).graph(), 3));
}

TEST_CASE("recognition agrees with the exhaustive definition") {
    // All graphs on 5 vertices with the 2-tree edge count, plus random
    // k-trees with one edge moved.
    const int n = 5;
    std::vector<Edge> pairs;
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    }
    int accepted = 0;
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
        if (std::popcount(mask) != 7) continue;
        std::vector<Edge> es;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (mask >> i & 1u) es.push_back(pairs[i]);
        }
        const auto g = Graph::from_edges(n, es);
        const bool got = static_cast<bool>(recognize(g, 2));
        REQUIRE(got == oracle::is_ktree(g, 2));
        accepted += got;
    }
    CHECK(accepted == 70);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 1 + trial % 3;
        auto g = gen_random(k, k + 4, trial).graph();
        auto es = g.edges();
        const auto [u, v] = es[rng() % es.size()];
        g.remove_edge(u, v);
        Vertex a = static_cast<Vertex>(rng() % g.order());
        Vertex b = static_cast<Vertex>(rng() % g.order());
        if (a != b) g.add_edge(a, b);
        if (g.size() != es.size()) continue;
        REQUIRE(static_cast<bool>(recognize(g, k)) == oracle::is_ktree(g, k));
    }
}

TEST_CASE("elimination orders replay") {
    for (int k = 1; k <= 4; ++k) {
        for (std::uint64_t s = 0; s < 20; ++s) {
            const auto t = gen_random(k, k + 1 + static_cast<int>(s), s);
            CHECK(t.graph().size() == ktree_edge_count(k, t.order()));
            CHECK(validate_elimination(t.graph(), k, t.elimination()));
            auto r = recognize(t.graph(), k);
            REQUIRE(r);
            CHECK(validate_elimination(t.graph(), k, r.ktree->elimination()));
            CHECK(static_cast<int>(r.ktree->elimination().order.size()) == t.order() - k);
        }
    }
    auto t = gen_kpath(2, 5);
    auto bad = t.elimination();
    std::swap(bad.order[0], bad.order[1]);
    CHECK_FALSE(validate_elimination(t.graph(), 2, bad));
}

TEST_CASE("simplicial layers") {
    auto star = simplicial_layers(gen_kstar(2, 5));
    REQUIRE(star.layers.size() == 1);
    CHECK(star.layers[0] == VertexSet{2, 3, 4});
    CHECK(star.terminal == VertexSet{0, 1});

    auto path = simplicial_layers(gen_kpath(2, 6));
    REQUIRE(path.layers.size() >= 2);
    CHECK(path.layers[0] == VertexSet{0, 5});
    CHECK(path.layers[1] == VertexSet{1, 4});

    CHECK(simplicial_layers(gen_kpath(3, 3)).layers.empty());

    // Residual K_{k+1}: literal takes all of it, the other convention one vertex.
    auto lit = simplicial_layers(gen_kpath(2, 3), CliqueConvention::literal);
    CHECK(lit.layers.front() == VertexSet{0, 1, 2});
    auto one = simplicial_layers(gen_kpath(2, 3), CliqueConvention::single_vertex);
    CHECK(one.layers.front().size() == 1);
    CHECK(one.terminal.size() == 2);
}

TEST_CASE("layer invariants on random k-trees") {
    for (int k = 1; k <= 4; ++k) {
        for (std::uint64_t s = 0; s < 25; ++s) {
            const int n = k + 2 + static_cast<int>(s % 12);
            const auto t = gen_random(k, n, s);
            const auto L = simplicial_layers(t);
            CHECK(L.layers.front().size() >= 2);
            std::vector<int> seen(n, 0);
            for (const auto& layer : L.layers) {
                for (Vertex v : layer) ++seen[v];
            }
            for (Vertex v : L.terminal) ++seen[v];
            CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
            // S1 is exactly the set of k-simplicial vertices.
            std::vector<char> alive(n, 1);
            VertexSet s1;
            for (Vertex v = 0; v < n; ++v) {
                if (is_k_simplicial(t.graph(), k, v, alive)) s1.push_back(v);
            }
            CHECK(s1 == L.layers.front());
        }
    }
}

TEST_CASE("cut k-cliques") {
    auto cuts = cut_kcliques(gen_kstar(2, 6));
    auto base = std::find_if(cuts.begin(), cuts.end(), [](const CutClique& c) { return c.clique == VertexSet{0, 1}; });
    REQUIRE(base != cuts.end());
    CHECK(base->components == 4);

    CHECK(cut_kcliques(gen_kpath(3, 4)).empty());

    auto pc = cut_kcliques(gen_kpath(2, 5));
    auto mid = std::find_if(pc.begin(), pc.end(), [](const CutClique& c) { return c.clique == VertexSet{1, 2}; });
    REQUIRE(mid != pc.end());
    CHECK(mid->components == 2);
    for (const auto& c : pc) CHECK(c.components >= 2);
}

TEST_CASE("hyper pendant decomposition") {
    for (int k = 1; k <= 3; ++k) {
        const auto d = hyper_pendant_decomposition(gen_kpath(k, k + 6));
        CHECK(d.whole_graph);
        CHECK(d.pendants.empty());
    }

    const auto star = hyper_pendant_decomposition(gen_kstar(2, 6));
    CHECK_FALSE(star.whole_graph);
    REQUIRE(star.pendants.size() == 4);
    for (const auto& p : star.pendants) {
        CHECK(p.cut == VertexSet{0, 1});
        CHECK(p.branch.size() == 1);
        CHECK(p.tip == p.branch.front());
    }

    const auto tri = hyper_pendant_decomposition(triangle_with_apexes());
    CHECK_FALSE(tri.whole_graph);
    REQUIRE(tri.pendants.size() == 3);
    for (const auto& p : tri.pendants) {
        CHECK(p.cut == VertexSet{0, 1, 2});
        CHECK(p.branch.size() == 1);
    }
}

TEST_CASE("pendant branches eliminate in global order") {
    int checked = 0;
    for (int k = 1; k <= 3; ++k) {
        for (std::uint64_t s = 0; s < 40; ++s) {
            const auto t = gen_random(k, k + 4 + static_cast<int>(s % 10), s);
            const auto& g = t.graph();
            std::vector<int> pos(g.order(), g.order());
            for (std::size_t i = 0; i < t.elimination().order.size(); ++i) pos[t.elimination().order[i]] = static_cast<int>(i);
            const auto S1 = simplicial_layers(t).layers.front();
            for (const auto& p : hyper_pendant_decomposition(t).pendants) {
                CHECK(std::count_if(p.branch.begin(), p.branch.end(),
                                    [&](Vertex v) { return std::binary_search(S1.begin(), S1.end(), v); }) == 1);
                // Subgraph on cut + branch, relabeled.
                VertexSet keep = p.cut;
                keep.insert(keep.end(), p.branch.begin(), p.branch.end());
                std::sort(keep.begin(), keep.end());
                VertexSet drop;
                for (Vertex v = 0; v < g.order(); ++v) {
                    if (!std::binary_search(keep.begin(), keep.end(), v)) drop.push_back(v);
                }
                const auto sub = induced_delete(g, drop);
                if (static_cast<int>(p.cut.size()) != k) continue;
                // The property needs the elimination to end outside the branch.
                const auto& base = t.elimination().base;
                if (std::find_first_of(base.begin(), base.end(), p.branch.begin(), p.branch.end()) != base.end()) {
                    continue;
                }
                EliminationOrder e;
                VertexSet branch = p.branch;
                std::sort(branch.begin(), branch.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
                for (Vertex v : branch) e.order.push_back(sub.old_to_new[v]);
                for (Vertex v : p.cut) e.base.push_back(sub.old_to_new[v]);
                CHECK(validate_elimination(sub.graph, k, e));
                ++checked;
            }
        }
    }
    CHECK(checked > 100);
}

} // TEST_SUITE
