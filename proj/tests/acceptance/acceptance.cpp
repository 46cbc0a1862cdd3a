// Acceptance checks, one line per criterion. `ktz_acceptance N` runs only
// criterion N; without arguments all ten run.

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ktz/enumerate.hpp"
#include "ktz/extremal.hpp"
#include "ktz/indices.hpp"

using namespace ktz;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

const std::vector<std::pair<int, int>> kGrid = {
    {1, 5}, {1, 6}, {1, 7}, {1, 8}, {1, 9}, {2, 5}, {2, 6}, {2, 7}, {3, 6}, {3, 7}, {4, 7},
};
const std::vector<double> kExponents = {0.5, 1, 2, 3};

std::string kn(int k, int n) { return "(k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")"; }

// Census used by criteria 1-3. Where the labeled census is small enough it
// must produce the same classes as canonical growth.
EnumerationReport census(int k, int n, Outcome& o) {
    auto r = enumerate_unlabeled(k, n);
    if (r.labeled_count <= kDefaultLabeledBound) {
        const auto lab = unlabeled_representatives(enumerate_labeled_growth(k, n));
        if (lab.canonical != r.canonical || lab.labeled_count != r.labeled_count) {
            o.fail("labeled and canonical censuses differ at " + kn(k, n));
        }
    }
    return r;
}

bool extremal_at(const ExtremalScan& s, int want_min, int want_max) {
    return static_cast<int>(s.argmin) == want_min && static_cast<int>(s.argmax) == want_max && s.min_unique &&
           s.max_unique;
}

Outcome criterion1() {
    Outcome o;
    int checks = 0;
    for (auto [k, n] : kGrid) {
        const auto c = census(k, n, o);
        const int star = find_class(c, gen_kstar(k, n).graph());
        const int path = find_class(c, gen_kpath(k, n).graph());
        for (double e : kExponents) {
            ++checks;
            if (!extremal_at(extremal_scan(c, {IndexFamily::PI1C, e}), star, path)) {
                o.fail("Pi1c c=" + std::to_string(e) + " at " + kn(k, n));
            }
        }
    }
    if (o.pass) o.detail = std::to_string(checks) + " (k,n,c) cases: unique min at the k-star, unique max at the k-path";
    return o;
}

Outcome criterion2() {
    Outcome o;
    for (auto [k, n] : kGrid) {
        const auto c = census(k, n, o);
        const int star = find_class(c, gen_kstar(k, n).graph());
        const int path = find_class(c, gen_kpath(k, n).graph());
        if (!extremal_at(extremal_scan(c, {IndexFamily::PI2, 1}), path, star)) o.fail("Pi2 at " + kn(k, n));
    }
    if (o.pass) o.detail = std::to_string(kGrid.size()) + " (k,n) cases: unique min at the k-path, unique max at the k-star";
    return o;
}

Outcome criterion3() {
    Outcome o;
    for (int n = 5; n <= 9; ++n) {
        const auto trees = census(1, n, o);
        const int star = find_class(trees, gen_kstar(1, n).graph());
        const int path = find_class(trees, gen_kpath(1, n).graph());
        if (!extremal_at(extremal_scan(trees, {IndexFamily::PI1C, 2}), star, path)) o.fail("Pi1 at n=" + std::to_string(n));
        if (!extremal_at(extremal_scan(trees, {IndexFamily::PI2, 1}), path, star)) o.fail("Pi2 at n=" + std::to_string(n));
    }
    const auto s5 = index_pi1c(gen_kstar(1, 5).graph(), 2);
    const auto p5 = index_pi1c(gen_kpath(1, 5).graph(), 2);
    if (*s5.exact != 16) o.fail("Pi1(S_5) = " + s5.decimal());
    if (*p5.exact != 64) o.fail("Pi1(P_5) = " + p5.decimal());
    if (o.pass) o.detail = "trees n=5..9: star/path extremal and unique; Pi1(S_5)=16, Pi1(P_5)=64";
    return o;
}

Outcome criterion4() {
    Outcome o;
    int cases = 0;
    for (int k = 1; k <= 5; ++k) {
        for (int n = k + 1; n <= k + 12; ++n) {
            const auto star = gen_kstar(k, n).graph();
            const auto path = gen_kpath(k, n).graph();
            std::vector<IndexParams> ps = {{IndexFamily::PI2, 1}};
            for (int c = 1; c <= 3; ++c) ps.push_back({IndexFamily::PI1C, double(c)});
            for (const auto& p : ps) {
                cases += 2;
                if (*closed_form_star(k, n, p).exact != *index_value(star, p, EvalMode::exact).exact) {
                    o.fail("star " + to_string(p.family) + " at " + kn(k, n));
                }
                if (*closed_form_path(k, n, p).exact != *index_value(path, p, EvalMode::exact).exact) {
                    o.fail("path " + to_string(p.family) + " at " + kn(k, n));
                }
            }
        }
    }
    if (o.pass) o.detail = std::to_string(cases) + " closed-form values equal direct exact computation";
    return o;
}

Outcome criterion5() {
    Outcome o;
    auto expect = [&](const AuditReport& r, const std::string& stmt, const std::string& lit, const std::string& dir) {
        for (const auto& e : r.entries) {
            if (e.statement != stmt) continue;
            if (e.literal != lit || e.direct != dir || e.agrees) {
                o.fail(stmt + " at " + kn(r.k, r.n) + ": literal " + e.literal + " vs direct " + e.direct);
            }
            return;
        }
        o.fail("no audit entry " + stmt + " at " + kn(r.k, r.n));
    };
    const auto a = audit_published_formulas(2, 5, 1);
    expect(a, "star.pi1c", "72", "128");
    expect(a, "star.pi2", "46656", "4194304");
    const auto b = audit_published_formulas(2, 4, 1);
    expect(b, "path.pi1c", "12", "36");
    expect(b, "path.pi2", "432", "11664");
    for (int n = 5; n <= 9; ++n) {
        const auto r = audit_published_formulas(1, n, 1);
        if (r.discrepancies() != 0) o.fail("k=1 discrepancy at n=" + std::to_string(n));
    }
    if (o.pass) o.detail = "72 vs 128, 46656 vs 4194304, 12 vs 36, 432 vs 11664; k=1 n=5..9 clean";
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::ostringstream counts;
    const std::array<std::pair<int, int>, 5> cases = {{{2, 4}, {2, 5}, {3, 4}, {3, 5}, {3, 6}}};
    for (auto [k, n] : cases) {
        const auto g = enumerate_labeled_growth(k, n);
        const auto f = enumerate_labeled_filter(k, n);
        counts << ' ' << kn(k, n) << '=' << g.labeled_count;
        if (g.labeled_count != f.labeled_count || g.labeled != f.labeled) {
            o.fail("growth " + std::to_string(g.labeled_count) + " vs filter " + std::to_string(f.labeled_count) +
                   " at " + kn(k, n));
        }
    }
    const bool agree = o.pass;
    const auto four = enumerate_labeled_growth(2, 4).labeled_count;
    const auto five = enumerate_labeled_growth(2, 5).labeled_count;
    if (four != 6) o.fail("labeled 2-trees on 4 vertices: " + std::to_string(four) + ", expected 6");
    if (five != 50) o.fail("labeled 2-trees on 5 vertices: " + std::to_string(five) + ", expected 50");
    o.detail = std::string(agree ? "growth and filter agree:" : "growth and filter DISAGREE:") + counts.str() +
               (o.pass ? "" : "; " + o.detail);
    return o;
}

Outcome criterion7() {
    Outcome o;
    int runs = 0, steps = 0;
    for (auto [k, n] : {std::pair{2, 8}, std::pair{3, 9}}) {
        const auto star = gen_kstar(k, n).graph();
        const auto path = gen_kpath(k, n).graph();
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto start = gen_random(k, n, seed);
            const std::array<std::pair<Objective, const Graph*>, 4> goals = {{
                {{{IndexFamily::PI1C, 1}, Goal::minimize}, &star},
                {{{IndexFamily::PI1C, 1}, Goal::maximize}, &path},
                {{{IndexFamily::PI2, 1}, Goal::minimize}, &path},
                {{{IndexFamily::PI2, 1}, Goal::maximize}, &star},
            }};
            for (const auto& [obj, target] : goals) {
                ++runs;
                const auto r = local_search(start, obj);
                const std::string where = kn(k, n) + " seed " + std::to_string(seed) + " " + to_string(obj.goal) +
                                          " " + to_string(obj.params.family);
                if (!are_isomorphic(r.fixed_point.graph(), *target)) o.fail("wrong fixed point " + where);
                for (const auto& s : r.steps) {
                    ++steps;
                    const auto cmp = compare_values(s.after, s.before);
                    const bool ok = s.move.neutral ? cmp == 0 : (obj.goal == Goal::maximize ? cmp > 0 : cmp < 0);
                    if (!ok) o.fail("non-monotone step " + where);
                    if (std::fabs(s.delta.pi1 - s.predicted.pi1) > 1e-9 ||
                        std::fabs(s.delta.pi2 - s.predicted.pi2) > 1e-9) {
                        o.fail("ratio mismatch " + where);
                    }
                }
            }
        }
    }
    if (o.pass) {
        o.detail = std::to_string(runs) + " searches, " + std::to_string(steps) +
                   " moves: all reach the expected extremal graph monotonically, ratios within 1e-9";
    }
    return o;
}

Outcome criterion8() {
    Outcome o;
    for (int m = 1; m <= 10; ++m) {
        for (int i = 0; i < 100; ++i) {
            const double x = 0.5 * i;
            if (!(f5_ratio(x, m) < f5_ratio(x + 0.5, m))) o.fail("f5 at x=" + std::to_string(x));
            if (!(f6_ratio(x, m) > f6_ratio(x + 0.5, m))) o.fail("f6 at x=" + std::to_string(x));
        }
    }
    if (o.pass) o.detail = "x in {0, 0.5, ..., 50}, m in 1..10";
    return o;
}

Outcome criterion9() {
    Outcome o;
    std::mt19937_64 rng(2024);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        const int k = 1 + i % 4;
        const int n = std::uniform_int_distribution<int>(k + 1, 40)(rng);
        const auto g = gen_random(k, n, rng()).graph();
        for (const IndexParams p : {IndexParams{IndexFamily::PI1C, 1}, IndexParams{IndexFamily::PI1C, 2},
                                    IndexParams{IndexFamily::PI2, 1}}) {
            const auto v = index_value(g, p, EvalMode::both);
            const double err = std::fabs(ln_bigint(*v.exact) - *v.logval) / std::max(1.0, std::fabs(*v.logval));
            worst = std::max(worst, err);
            if (err > 1e-9) o.fail("tolerance exceeded at " + kn(k, n));
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "3000 values, worst relative gap %.3g", worst);
    if (o.pass) o.detail = buf;
    return o;
}

std::string capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    status = pclose(p);
    return out;
}

Outcome criterion10() {
    Outcome o;
    const std::string exe = KTZ_CLI_PATH;
    const std::vector<std::string> args = {
        "gen --kind random -k 3 -n 25 --seed 17",
        "gen --kind random -k 2 -n 12 --seed 3 --format json",
        "index --kind random -k 4 -n 30 --seed 9 -c 0.5,1,2 --format json",
        "verify -k 2 -n 7 -c 0.5,1,2,3",
        "verify -k 3 -n 7 -c 1 --format json",
        "enumerate -k 2 -n 6",
        "search --kind random -k 2 -n 10 --seed 5 --direction max",
        "search --kind random -k 3 -n 9 --seed 8 --family PI2 --direction min --format json",
        "audit -k 2 -n 5 -c 1,2",
        "cuts --kind random -k 2 -n 12 --seed 1",
    };
    for (const auto& a : args) {
        int s1 = 0, s2 = 0;
        const auto first = capture(exe + " " + a, s1);
        const auto second = capture(exe + " " + a, s2);
        if (s1 != 0 || s2 != 0) o.fail("nonzero exit for: ktz " + a);
        if (first.empty()) o.fail("no output for: ktz " + a);
        if (first != second) o.fail("outputs differ for: ktz " + a);
    }
    if (o.pass) o.detail = std::to_string(args.size()) + " commands, each run twice with byte-identical output";
    return o;
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"first index extremal over the census grid", criterion1},
        {"second index extremal over the census grid", criterion2},
        {"trees: star and path bounds", criterion3},
        {"closed forms equal direct computation", criterion4},
        {"published formula audit", criterion5},
        {"labeled census cross-check (growth vs filter)", criterion6},
        {"local search convergence", criterion7},
        {"ratio function monotonicity", criterion8},
        {"exact and log values agree", criterion9},
        {"CLI determinism", criterion10},
    };
    std::vector<int> pick;
    for (int i = 1; i < argc; ++i) pick.push_back(std::stoi(argv[i]));
    if (pick.empty()) {
        for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) pick.push_back(i);
    }
    int failed = 0;
    for (int i : pick) {
        if (i < 1 || i > static_cast<int>(criteria.size())) {
            std::cerr << "no criterion " << i << '\n';
            return 1;
        }
        const auto& [name, fn] = criteria[i - 1];
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << i << ": " << (o.pass ? "PASS" : "FAIL") << "  " << name << " -- " << o.detail
                  << '\n';
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
