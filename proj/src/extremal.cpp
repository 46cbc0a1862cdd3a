#include "ktz/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <tuple>

namespace ktz {

double f5_ratio(double x, int m) {
    if (x < 0) throw std::domain_error("f5_ratio: x must be nonnegative");
    if (m < 1) throw std::domain_error("f5_ratio: m must be a positive integer");
    return x / (x + m);
}

namespace {

double xlnx(double x) { return x > 0 ? x * std::log(x) : 0.0; }

} // namespace

double f6_ratio(double x, int m) {
    if (x < 0) throw std::domain_error("f6_ratio: x must be nonnegative");
    if (m < 1) throw std::domain_error("f6_ratio: m must be a positive integer");
    return std::exp(xlnx(x) - xlnx(x + m));
}

std::string to_string(MoveKind k) {
    switch (k) {
    case MoveKind::leaf_shift: return "leaf_shift";
    case MoveKind::pendant_straighten: return "pendant_straighten";
    case MoveKind::branch_merge: return "branch_merge";
    }
    return "?";
}

std::string to_string(Direction d) {
    return d == Direction::toward_star ? "toward_star" : "toward_path";
}

std::string to_string(Goal g) { return g == Goal::minimize ? "min" : "max"; }

std::string to_string(ShapeClass s) {
    switch (s) {
    case ShapeClass::star: return "star";
    case ShapeClass::path: return "path";
    case ShapeClass::star_and_path: return "star=path";
    case ShapeClass::other: return "other";
    }
    return "?";
}

Direction direction_for(const Objective& obj) {
    const bool second = obj.params.family == IndexFamily::PI2;
    const bool concentrate = (obj.goal == Goal::minimize) != second;
    return concentrate ? Direction::toward_star : Direction::toward_path;
}

namespace {

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool adjacent_to_all(const Graph& g, Vertex z, const VertexSet& s) {
    for (Vertex a : s) {
        if (a == z || !g.adjacent(z, a)) return false;
    }
    return true;
}

// Every vertex of `movers` trades its edge to `donor` for one to `receiver`.
RewireMove transfer(MoveKind kind, std::string variant, Vertex donor, Vertex receiver,
                    const VertexSet& movers) {
    RewireMove mv;
    mv.kind = kind;
    mv.variant = std::move(variant);
    for (Vertex w : movers) {
        mv.remove.push_back(make_edge(w, donor));
        mv.add.push_back(make_edge(w, receiver));
    }
    std::sort(mv.remove.begin(), mv.remove.end());
    std::sort(mv.add.begin(), mv.add.end());
    const int m = static_cast<int>(movers.size());
    mv.shifts = {{donor, -m}, {receiver, +m}};
    return mv;
}

Graph rewired_graph(const Graph& g, const RewireMove& mv) {
    Graph h = g;
    for (const auto& [u, v] : mv.remove) {
        if (!h.remove_edge(u, v)) {
            throw MoveRejected("move removes absent edge " + std::to_string(u) + "-" + std::to_string(v), {});
        }
    }
    for (const auto& [u, v] : mv.add) {
        if (!h.add_edge(u, v)) {
            throw MoveRejected("move adds present edge " + std::to_string(u) + "-" + std::to_string(v), {});
        }
    }
    return h;
}

class MoveCollector {
public:
    MoveCollector(const KTree& t, std::vector<RejectedMove>* rejected) : t_(t), rejected_(rejected) {}

    void offer(RewireMove mv) {
        auto key = std::make_pair(mv.remove, mv.add);
        if (!seen_.insert(key).second) return;
        Graph h;
        try {
            h = rewired_graph(t_.graph(), mv);
        } catch (const MoveRejected&) {
            if (rejected_) rejected_->push_back({std::move(mv), {}});
            return;
        }
        auto rec = recognize(h, t_.k());
        if (!rec) {
            if (rejected_) rejected_->push_back({std::move(mv), std::move(rec.residue)});
            return;
        }
        moves_.push_back(std::move(mv));
    }

    std::vector<RewireMove> take() {
        auto key = [](const RewireMove& m) {
            std::vector<std::pair<std::string, int>> piv(m.pivots.begin(), m.pivots.end());
            return std::make_tuple(static_cast<int>(m.kind), piv, m.remove, m.add);
        };
        std::stable_sort(moves_.begin(), moves_.end(),
                         [&](const RewireMove& a, const RewireMove& b) { return key(a) < key(b); });
        return std::move(moves_);
    }

private:
    const KTree& t_;
    std::vector<RejectedMove>* rejected_;
    std::set<std::pair<std::vector<Edge>, std::vector<Edge>>> seen_;
    std::vector<RewireMove> moves_;
};

// Simplicial vertices of degree k adjacent to a second-layer vertex u get
// re-anchored so that degree flows onto an already heavier vertex.
void leaf_shift_moves(const KTree& t, MoveCollector& out) {
    const Graph& g = t.graph();
    const int n = g.order();
    const int k = t.k();
    if (n <= k + 1) return;
    const auto layers = simplicial_layers(t, CliqueConvention::literal);
    if (layers.layers.size() < 2) return; // peeling S1 leaves K_k: the k-star
    const VertexSet& s1 = layers.layers[0];
    const VertexSet& s2 = layers.layers[1];
    const int residual = n - static_cast<int>(s1.size());

    if (residual == k + 1) {
        // G - S1 is a (k+1)-clique Q; every leaf hangs on a k-subset of Q.
        const VertexSet& q = s2;
        for (Vertex vt : s1) {
            const VertexSet& nb = g.neighbors(vt);
            for (Vertex x : nb) {
                for (Vertex y : set_minus(q, nb)) {
                    if (g.degree(y) < g.degree(x)) continue;
                    RewireMove mv = transfer(MoveKind::leaf_shift, "residual_clique", x, y, {vt});
                    Vertex u = x;
                    for (Vertex w : nb) {
                        if (w != x) {
                            u = w;
                            break;
                        }
                    }
                    mv.pivots = {{"u", u}, {"v_t", vt}, {"x", x}, {"y", y}};
                    out.offer(std::move(mv));
                }
            }
        }
        return;
    }

    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    for (Vertex v : s1) alive[v] = 0;
    auto residual_degree = [&](Vertex v) {
        int d = 0;
        for (Vertex w : g.neighbors(v)) d += alive[w];
        return d;
    };
    for (Vertex u : s2) {
        const VertexSet vu = set_intersect(g.neighbors(u), s1);
        if (vu.empty()) continue;
        const VertexSet s = set_minus(g.neighbors(u), vu);
        for (Vertex v : s) {
            if (residual_degree(v) < k + 1) continue;
            VertexSet movers;
            for (Vertex w : vu) {
                if (!g.adjacent(w, v)) movers.push_back(w);
            }
            const int s1_count = static_cast<int>(movers.size());
            if (s1_count == 0) continue;
            if (g.degree(v) < g.degree(u) - s1_count + 1) continue;
            RewireMove mv = transfer(MoveKind::leaf_shift, "batch", u, v, movers);
            mv.pivots = {{"u", u}, {"v", v}, {"s", static_cast<int>(vu.size())}, {"s1", s1_count}};
            out.offer(std::move(mv));
        }
    }
}

// Branches hanging off a cut k-clique A are re-anchored from x in A onto a
// vertex z completing A - x to a clique, when x carries more than z + m.
void rehang_moves(const KTree& t, MoveCollector& out) {
    const Graph& g = t.graph();
    const int n = g.order();
    const int k = t.k();
    if (n <= k + 1) return;

    const auto decomposition = hyper_pendant_decomposition(t);
    std::vector<int> elim_pos(static_cast<std::size_t>(n), n);
    for (std::size_t i = 0; i < t.elimination().order.size(); ++i) {
        elim_pos[t.elimination().order[i]] = static_cast<int>(i);
    }

    for (const auto& cut : cut_kcliques(t)) {
        const VertexSet& a = cut.clique;
        const auto comps = components(g, a);
        std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
        for (std::size_t ci = 0; ci < comps.size(); ++ci) {
            for (Vertex v : comps[ci]) comp_of[v] = static_cast<int>(ci);
        }
        for (std::size_t ci = 0; ci < comps.size(); ++ci) {
            const VertexSet& c = comps[ci];
            for (Vertex x : a) {
                const VertexSet movers = set_intersect(g.neighbors(x), c);
                const int m = static_cast<int>(movers.size());
                if (m == 0) continue;
                VertexSet rest;
                for (Vertex y : a) {
                    if (y != x) rest.push_back(y);
                }
                for (Vertex z = 0; z < n; ++z) {
                    if (contains(a, z) || comp_of[z] == static_cast<int>(ci)) continue;
                    if (!adjacent_to_all(g, z, rest)) continue;
                    if (g.degree(x) <= g.degree(z) + m) continue;

                    RewireMove mv;
                    if (cut.components >= 3) {
                        const int q = static_cast<int>(comps[comp_of[z]].size());
                        const char* variant = q == 1 ? "merge_q1" : (q <= k ? "merge_short" : "merge_long");
                        mv = transfer(MoveKind::branch_merge, variant, x, z, movers);
                        mv.pivots = {{"x_t", x}, {"v_q", z}, {"m", m},
                                     {"p", static_cast<int>(c.size())}, {"q", q}};
                    } else {
                        // A (k+1)-clique A + y around which three branches meet.
                        Vertex hub = -1;
                        for (Vertex y = 0; y < n && hub < 0; ++y) {
                            if (contains(a, y) || comp_of[y] == static_cast<int>(ci)) continue;
                            if (!adjacent_to_all(g, y, a)) continue;
                            VertexSet big = a;
                            big.insert(std::lower_bound(big.begin(), big.end(), y), y);
                            if (components(g, big).size() >= 3) hub = y;
                        }
                        if (hub >= 0) {
                            mv = transfer(MoveKind::branch_merge, "merge_clique", x, z, movers);
                            mv.pivots = {{"x_1", x}, {"v_2", z}, {"y", hub}, {"m", m}};
                            if (m == 1) mv.pivots["v_1"] = movers.front();
                        } else {
                            VertexSet base;
                            if (decomposition.whole_graph) {
                                base = t.elimination().base;
                            } else {
                                for (const auto& p : decomposition.pendants) {
                                    if (std::includes(p.branch.begin(), p.branch.end(), c.begin(), c.end())) {
                                        base = p.cut;
                                        break;
                                    }
                                }
                            }
                            const char* variant = contains(base, x) ? "base_anchor" : "body_anchor";
                            mv = transfer(MoveKind::pendant_straighten, variant, x, z, movers);
                            Vertex us = movers.front();
                            for (Vertex w : movers) {
                                if (elim_pos[w] > elim_pos[us]) us = w;
                            }
                            mv.pivots = {{"x", x}, {"u_t", z}, {"u_s", us}, {"m", m}};
                        }
                    }
                    out.offer(std::move(mv));
                }
            }
        }
    }
}

// The simplicial tip of a branch of size q >= k+1 moves onto the tip clique of
// a branch at least as long; the degree multiset, hence every index, is unchanged.
// Branches meet either at a cut k-clique or, when none has three
// components, at a (k+1)-clique.
std::vector<VertexSet> branch_hubs(const KTree& t) {
    std::vector<VertexSet> hubs;
    for (const auto& cut : cut_kcliques(t)) {
        if (cut.components >= 3) hubs.push_back(cut.clique);
    }
    for (auto& q : k_cliques(t.graph(), t.k() + 1)) {
        if (components(t.graph(), q).size() >= 3) hubs.push_back(std::move(q));
    }
    return hubs;
}

void neutral_relink_moves(const KTree& t, MoveCollector& out) {
    const Graph& g = t.graph();
    const int n = g.order();
    const int k = t.k();
    if (n <= k + 1) return;
    const auto layers = simplicial_layers(t, CliqueConvention::literal);
    const VertexSet& s1 = layers.layers.front();

    for (const auto& hub : branch_hubs(t)) {
        const auto comps = components(g, hub);
        std::vector<Vertex> tip(comps.size(), -1);
        for (std::size_t ci = 0; ci < comps.size(); ++ci) {
            const VertexSet hits = set_intersect(comps[ci], s1);
            if (hits.size() == 1) tip[ci] = hits.front();
        }
        for (std::size_t c2 = 0; c2 < comps.size(); ++c2) {
            const int q = static_cast<int>(comps[c2].size());
            if (tip[c2] < 0 || q < k + 1) continue;
            for (std::size_t c1 = 0; c1 < comps.size(); ++c1) {
                const int p = static_cast<int>(comps[c1].size());
                if (c1 == c2 || tip[c1] < 0 || p < q) continue;
                const Vertex t2 = tip[c2];
                const Vertex t1 = tip[c1];
                for (Vertex y : g.neighbors(t1)) {
                    VertexSet target = g.neighbors(t1);
                    target.erase(std::find(target.begin(), target.end(), y));
                    target.insert(std::lower_bound(target.begin(), target.end(), t1), t1);

                    const VertexSet lose = set_minus(g.neighbors(t2), target);
                    const VertexSet gain = set_minus(target, g.neighbors(t2));
                    std::vector<int> before, after;
                    for (Vertex v : lose) {
                        before.push_back(g.degree(v));
                        after.push_back(g.degree(v) - 1);
                    }
                    for (Vertex v : gain) {
                        before.push_back(g.degree(v));
                        after.push_back(g.degree(v) + 1);
                    }
                    std::sort(before.begin(), before.end());
                    std::sort(after.begin(), after.end());
                    if (before != after) continue;

                    RewireMove mv;
                    mv.kind = MoveKind::branch_merge;
                    mv.variant = "relink_neutral";
                    mv.neutral = true;
                    for (Vertex v : lose) {
                        mv.remove.push_back(make_edge(t2, v));
                        mv.shifts.push_back({v, -1});
                    }
                    for (Vertex v : gain) {
                        mv.add.push_back(make_edge(t2, v));
                        mv.shifts.push_back({v, +1});
                    }
                    std::sort(mv.remove.begin(), mv.remove.end());
                    std::sort(mv.add.begin(), mv.add.end());
                    mv.pivots = {{"v_1", t2}, {"u_1", t1}, {"y", y}, {"p", p}, {"q", q}};
                    out.offer(std::move(mv));
                }
            }
        }
    }
}

// A whole branch at a hub is lifted off its attachment clique F and hung,
// in the same pattern, on a k-clique at the simplicial end of another
// branch. Short branches (at most k vertices) have no other way out.
void graft_moves(const KTree& t, MoveCollector& out) {
    const Graph& g = t.graph();
    const int n = g.order();
    const int k = t.k();
    if (n <= k + 1) return;
    const auto layers = simplicial_layers(t, CliqueConvention::literal);
    const VertexSet& s1 = layers.layers.front();

    for (const auto& hub : branch_hubs(t)) {
        const auto comps = components(g, hub);
        for (std::size_t ci = 0; ci < comps.size(); ++ci) {
            const VertexSet& branch = comps[ci];
            std::map<Vertex, int> load; // edges from the branch into each hub vertex
            for (Vertex c : branch) {
                for (Vertex f : set_intersect(g.neighbors(c), hub)) ++load[f];
            }
            std::vector<Vertex> from;
            for (const auto& [f, a] : load) from.push_back(f);
            std::stable_sort(from.begin(), from.end(), [&](Vertex a, Vertex b) { return load[a] > load[b]; });
            if (static_cast<int>(from.size()) > k) continue;

            for (std::size_t cj = 0; cj < comps.size(); ++cj) {
                if (cj == ci) continue;
                for (Vertex tip : set_intersect(comps[cj], s1)) {
                    for (Vertex y : g.neighbors(tip)) {
                        VertexSet target = g.neighbors(tip);
                        target.erase(std::find(target.begin(), target.end(), y));
                        target.insert(std::lower_bound(target.begin(), target.end(), tip), tip);
                        std::stable_sort(target.begin(), target.end(),
                                         [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
                        std::map<Vertex, Vertex> sigma;
                        for (std::size_t i = 0; i < from.size(); ++i) sigma[from[i]] = target[i];

                        RewireMove mv;
                        mv.kind = MoveKind::branch_merge;
                        mv.variant = "graft";
                        std::map<Vertex, int> shift;
                        for (Vertex c : branch) {
                            const VertexSet old_nb = set_intersect(g.neighbors(c), hub);
                            VertexSet new_nb;
                            for (Vertex f : old_nb) new_nb.push_back(sigma[f]);
                            std::sort(new_nb.begin(), new_nb.end());
                            for (Vertex v : set_minus(old_nb, new_nb)) {
                                mv.remove.push_back(make_edge(c, v));
                                --shift[v];
                            }
                            for (Vertex v : set_minus(new_nb, old_nb)) {
                                mv.add.push_back(make_edge(c, v));
                                ++shift[v];
                            }
                        }
                        double d1 = 0, d2 = 0;
                        for (const auto& [v, s] : shift) {
                            if (s == 0) continue;
                            mv.shifts.push_back({v, s});
                            d1 += std::log(g.degree(v) + s) - std::log(g.degree(v));
                            d2 += xlnx(g.degree(v) + s) - xlnx(g.degree(v));
                        }
                        // Degree must flow strictly toward the path in both indices.
                        if (mv.remove.empty() || d1 <= 1e-12 || d2 >= -1e-12) continue;
                        std::sort(mv.remove.begin(), mv.remove.end());
                        std::sort(mv.add.begin(), mv.add.end());
                        mv.pivots = {{"u_1", tip}, {"y", y}, {"q", static_cast<int>(branch.size())}};
                        out.offer(std::move(mv));
                    }
                }
            }
        }
    }
}

} // namespace

std::vector<RewireMove> enumerate_moves(const KTree& t, Direction dir, std::vector<RejectedMove>* rejected) {
    MoveCollector out(t, rejected);
    if (dir == Direction::toward_star) {
        leaf_shift_moves(t, out);
    } else {
        rehang_moves(t, out);
        neutral_relink_moves(t, out);
        graft_moves(t, out);
    }
    return out.take();
}

KTree rewire(const KTree& t, const RewireMove& mv) {
    Graph h = rewired_graph(t.graph(), mv);
    auto rec = recognize(h, t.k());
    if (!rec) {
        throw MoveRejected("rewired graph is not a " + std::to_string(t.k()) + "-tree", std::move(rec.residue));
    }
    return std::move(*rec.ktree);
}

MoveDelta predicted_delta(const Graph& g, const RewireMove& mv, double c) {
    MoveDelta d;
    if (mv.neutral) return d;
    for (const auto& s : mv.shifts) {
        const double before = g.degree(s.vertex);
        const double after = before + s.delta;
        d.pi1 += c * (std::log(after) - std::log(before));
        d.pi2 += xlnx(after) - xlnx(before);
    }
    return d;
}

AppliedMove apply_move(const KTree& t, const RewireMove& mv, double c) {
    KTree next = rewire(t, mv);
    const IndexParams p1{IndexFamily::PI1C, c};
    MoveDelta delta;
    delta.pi1 = index_value(next.graph(), p1, EvalMode::log).ln() - index_value(t.graph(), p1, EvalMode::log).ln();
    delta.pi2 = index_pi2(next.graph(), EvalMode::log).ln() - index_pi2(t.graph(), EvalMode::log).ln();
    return {std::move(next), delta, predicted_delta(t.graph(), mv, c)};
}

bool is_kstar(const Graph& g, int k) {
    const int n = g.order();
    if (k < 1 || n < k) return false;
    if (g.size() != ktree_edge_count(k, n)) return false;
    if (n <= k + 1) return true; // complete graph
    int hubs = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) ++hubs;
        else if (g.degree(v) != k) return false;
    }
    return hubs == k;
}

bool is_kpath(const Graph& g, int k) {
    const int n = g.order();
    if (k < 1 || n < k) return false;
    if (g.size() != ktree_edge_count(k, n)) return false;
    if (n <= k + 1) return true;

    std::vector<Vertex> order;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto fits = [&](Vertex w) {
        const int i = static_cast<int>(order.size());
        for (int j = 0; j < i; ++j) {
            if (g.adjacent(order[j], w) != (i - j <= k)) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self) -> bool {
        if (static_cast<int>(order.size()) == n) return true;
        for (Vertex w = 0; w < n; ++w) {
            if (used[w] || !fits(w)) continue;
            used[w] = 1;
            order.push_back(w);
            if (self(self)) return true;
            order.pop_back();
            used[w] = 0;
        }
        return false;
    };
    for (Vertex s = 0; s < n; ++s) {
        if (g.degree(s) != k) continue;
        used[s] = 1;
        order.push_back(s);
        if (rec(rec)) return true;
        order.pop_back();
        used[s] = 0;
    }
    return false;
}

ShapeClass classify_shape(const KTree& t) {
    const bool star = is_kstar(t.graph(), t.k());
    const bool path = is_kpath(t.graph(), t.k());
    if (star && path) return ShapeClass::star_and_path;
    if (star) return ShapeClass::star;
    if (path) return ShapeClass::path;
    return ShapeClass::other;
}

namespace {

std::string plateau_key(const Graph& g) {
    std::string key;
    for (const auto& [u, v] : g.edges()) {
        key += std::to_string(u);
        key += '-';
        key += std::to_string(v);
        key += ',';
    }
    return key;
}

} // namespace

SearchReport local_search(const KTree& start, const Objective& objective, const SearchOptions& options) {
    const IndexParams params = objective.params;
    const double c = params.family == IndexFamily::PI1C ? params.c : 1.0;
    const Direction dir = direction_for(objective);
    const double sign = objective.goal == Goal::maximize ? 1.0 : -1.0;

    KTree cur = start;
    IndexValue cur_value = index_value(cur.graph(), params, EvalMode::both);
    SearchReport report{start, objective, {}, start, ShapeClass::other, cur_value, cur_value, {}};
    std::set<std::string> plateau{plateau_key(cur.graph())};

    for (std::size_t step = 0; step < options.max_steps; ++step) {
        const auto moves = enumerate_moves(cur, dir, &report.rejected);
        std::optional<std::size_t> best;
        double best_gain = 0;
        std::optional<std::size_t> neutral;
        std::vector<std::optional<AppliedMove>> applied(moves.size());
        std::vector<IndexValue> values(moves.size());
        for (std::size_t i = 0; i < moves.size(); ++i) {
            applied[i] = apply_move(cur, moves[i], c);
            values[i] = index_value(applied[i]->tree.graph(), params, EvalMode::both);
            const auto cmp = compare_values(values[i], cur_value);
            const bool improves = objective.goal == Goal::maximize ? cmp > 0 : cmp < 0;
            if (improves) {
                const double gain = sign * (values[i].ln() - cur_value.ln());
                if (!best || gain > best_gain + 1e-12) {
                    best = i;
                    best_gain = gain;
                }
            } else if (cmp == 0 && moves[i].neutral && !neutral &&
                       !plateau.count(plateau_key(applied[i]->tree.graph()))) {
                neutral = i;
            }
        }
        std::size_t pick;
        if (best) {
            pick = *best;
            plateau.clear();
        } else if (neutral) {
            pick = *neutral;
        } else {
            break;
        }
        report.steps.push_back({moves[pick], cur_value, values[pick], applied[pick]->delta, applied[pick]->predicted});
        cur = std::move(applied[pick]->tree);
        cur_value = values[pick];
        plateau.insert(plateau_key(cur.graph()));
    }
    report.fixed_point = cur;
    report.final_value = cur_value;
    report.fixed_point_class = classify_shape(cur);
    return report;
}

void write_trace(std::ostream& out, const SearchReport& r) {
    char buf[128];
    out << "start " << to_string(r.objective.goal) << ' ' << to_string(r.objective.params.family);
    if (r.objective.params.family == IndexFamily::PI1C) {
        std::snprintf(buf, sizeof buf, " c=%.12g", r.objective.params.c);
        out << buf;
    }
    out << " n=" << r.start.order() << " k=" << r.start.k() << " value="
        << (r.start_value.exact ? r.start_value.decimal() : std::string("-"));
    std::snprintf(buf, sizeof buf, " log10=%.12f\n", r.start_value.log10());
    out << buf;
    std::size_t i = 0;
    for (const auto& s : r.steps) {
        out << "move " << ++i << ' ' << to_string(s.move.kind) << '/' << s.move.variant;
        for (const auto& [name, v] : s.move.pivots) out << ' ' << name << '=' << v;
        out << " -";
        for (const auto& [u, v] : s.move.remove) out << ' ' << u << '-' << v;
        out << " +";
        for (const auto& [u, v] : s.move.add) out << ' ' << u << '-' << v;
        std::snprintf(buf, sizeof buf, " dlnPi1=%.12f dlnPi2=%.12f\n", s.delta.pi1, s.delta.pi2);
        out << buf;
    }
    out << "fixed_point " << to_string(r.fixed_point_class) << " steps=" << r.steps.size()
        << " value=" << (r.final_value.exact ? r.final_value.decimal() : std::string("-"));
    std::snprintf(buf, sizeof buf, " log10=%.12f\n", r.final_value.log10());
    out << buf;
}

bool VerificationReport::ok() const {
    const bool need_unique = n >= k + 3;
    auto good = [&](const BoundCheck& b) { return b.holds && (b.unique || !need_unique); };
    return std::all_of(first_index.begin(), first_index.end(), good) && good(second_index);
}

namespace {

BoundCheck check_bounds(const EnumerationReport& census, const IndexParams& params, int star, int path,
                        bool star_is_min) {
    BoundCheck b;
    b.params = params;
    b.scan = extremal_scan(census, params);
    b.star_class = star;
    b.path_class = path;
    b.degenerate = census.representatives.size() == 1;
    const int lo = static_cast<int>(b.scan.argmin);
    const int hi = static_cast<int>(b.scan.argmax);
    const int want_lo = star_is_min ? star : path;
    const int want_hi = star_is_min ? path : star;
    // Ties with the expected class still satisfy the inequality; uniqueness
    // is what a tie breaks.
    auto at = [&](int cls) -> const IndexValue& { return b.scan.values[static_cast<std::size_t>(cls)].value; };
    b.holds = want_lo >= 0 && want_hi >= 0 && compare_values(at(want_lo), at(lo)) == 0 &&
              compare_values(at(want_hi), at(hi)) == 0;
    b.unique = b.holds && lo == want_lo && hi == want_hi && b.scan.min_unique && b.scan.max_unique;
    return b;
}

} // namespace

VerificationReport verify_extremal_theorems(int k, int n, const std::vector<double>& c_list, int bound) {
    VerificationReport r;
    r.k = k;
    r.n = n;
    r.census = enumerate_unlabeled(k, n, bound);
    const int star = find_class(r.census, gen_kstar(k, n).graph(), bound);
    const int path = find_class(r.census, gen_kpath(k, n).graph(), bound);
    for (double c : c_list) {
        r.first_index.push_back(check_bounds(r.census, {IndexFamily::PI1C, c}, star, path, true));
    }
    r.second_index = check_bounds(r.census, {IndexFamily::PI2, 1.0}, star, path, false);
    return r;
}

} // namespace ktz
