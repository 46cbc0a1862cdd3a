#include "ktz/indices.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "ktz/ktree.hpp"

namespace ktz {

std::string to_string(IndexFamily f) {
    switch (f) {
    case IndexFamily::PI1C: return "PI1C";
    case IndexFamily::PI2: return "PI2";
    case IndexFamily::NK: return "NK";
    }
    return "?";
}

IndexFamily parse_family(const std::string& s) {
    if (s == "PI1C" || s == "pi1c" || s == "pi1") return IndexFamily::PI1C;
    if (s == "PI2" || s == "pi2") return IndexFamily::PI2;
    if (s == "NK" || s == "nk") return IndexFamily::NK;
    throw IndexError("unknown index family '" + s + "' (expected PI1C, PI2 or NK)");
}

double ln_bigint(const BigInt& x) {
    if (x <= 0) throw IndexError("logarithm of a nonpositive value");
    const auto bits = boost::multiprecision::msb(x);
    if (bits < 960) return std::log(x.convert_to<double>());
    const unsigned shift = static_cast<unsigned>(bits) - 900;
    const BigInt top = x >> shift;
    return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

double IndexValue::ln() const {
    if (logval) return *logval;
    if (exact) return ln_bigint(*exact);
    throw IndexError("empty index value");
}

double IndexValue::log10() const { return ln() / std::log(10.0); }

std::string IndexValue::decimal() const { return exact ? exact->str() : std::string{}; }

std::optional<unsigned> integral_exponent(double c) {
    if (c > 0 && c <= 1e6 && std::floor(c) == c) return static_cast<unsigned>(c);
    return std::nullopt;
}

namespace {

void check_c(double c) {
    if (!(c > 0) || !std::isfinite(c)) {
        throw IndexError("exponent c must be a positive real, got " + std::to_string(c));
    }
}

// Product of base^exponent, with exponents already scaled for the family.
struct FactorList {
    std::vector<std::pair<long long, long long>> factors;

    void add(long long base, long long exponent) {
        if (exponent != 0) factors.emplace_back(base, exponent);
    }

    BigInt exact() const {
        BigInt r = 1;
        for (const auto& [b, e] : factors) r *= boost::multiprecision::pow(BigInt(b), static_cast<unsigned>(e));
        return r;
    }

    double ln() const {
        double s = 0;
        for (const auto& [b, e] : factors) {
            if (b == 0) throw IndexError("degree-0 vertex: log-domain value undefined");
            s += static_cast<double>(e) * std::log(static_cast<double>(b));
        }
        return s;
    }
};

// Builds the value of prod(base^e)^c (family PI1C/NK) or prod(base^e) (PI2).
IndexValue evaluate(const FactorList& f, const IndexParams& p, EvalMode mode) {
    IndexValue v;
    const double c = p.family == IndexFamily::PI1C ? p.c : 1.0;
    if (p.family == IndexFamily::PI1C) check_c(c);
    const bool scaled = p.family != IndexFamily::PI2;
    if (mode != EvalMode::log) {
        if (auto ce = integral_exponent(c); ce || !scaled) {
            BigInt base = f.exact();
            v.exact = scaled ? boost::multiprecision::pow(base, *ce) : base;
        } else if (mode == EvalMode::exact) {
            throw IndexError("exact value requires an integer exponent, got c = " + std::to_string(c));
        }
    }
    if (mode != EvalMode::exact) v.logval = (scaled ? c : 1.0) * f.ln();
    return v;
}

} // namespace

IndexValue index_from_degrees(std::span<const int> degrees, const IndexParams& p, EvalMode mode) {
    FactorList f;
    for (int d : degrees) {
        if (p.family == IndexFamily::PI2) {
            // 0^0 = 1: isolated vertices contribute nothing to the edge product.
            if (d > 0) f.add(d, d);
        } else {
            f.factors.emplace_back(d, 1);
        }
    }
    return evaluate(f, p, mode);
}

IndexValue index_pi1c(const Graph& g, double c, EvalMode mode) {
    check_c(c);
    const auto d = degree_sequence(g);
    return index_from_degrees(d, {IndexFamily::PI1C, c}, mode);
}

IndexValue index_nk(const Graph& g, EvalMode mode) {
    const auto d = degree_sequence(g);
    return index_from_degrees(d, {IndexFamily::NK, 1.0}, mode);
}

IndexValue index_pi2(const Graph& g, EvalMode mode) {
    const auto d = degree_sequence(g);
    IndexValue v = index_from_degrees(d, {IndexFamily::PI2, 1.0}, mode);
    if (v.exact) {
        BigInt edge_product = 1;
        for (const auto& [a, b] : g.edges()) edge_product *= BigInt(d[a]) * d[b];
        if (edge_product != *v.exact) {
            throw std::logic_error("index_pi2: edge product and vertex-power form disagree");
        }
    }
    return v;
}

IndexValue index_value(const Graph& g, const IndexParams& p, EvalMode mode) {
    switch (p.family) {
    case IndexFamily::PI1C: return index_pi1c(g, p.c, mode);
    case IndexFamily::PI2: return index_pi2(g, mode);
    case IndexFamily::NK: return index_nk(g, mode);
    }
    throw IndexError("unknown family");
}

std::weak_ordering compare_values(const IndexValue& a, const IndexValue& b) {
    if (a.exact && b.exact) {
        if (*a.exact < *b.exact) return std::weak_ordering::less;
        if (*a.exact > *b.exact) return std::weak_ordering::greater;
        return std::weak_ordering::equivalent;
    }
    const double la = a.ln();
    const double lb = b.ln();
    if (std::abs(la - lb) <= kLogTolerance) return std::weak_ordering::equivalent;
    return la < lb ? std::weak_ordering::less : std::weak_ordering::greater;
}

DegreeSequence star_degrees(int k, int n) {
    if (k < 1 || n <= k) {
        throw IndexError("star_degrees: need n >= k+1, got k = " + std::to_string(k) +
                         ", n = " + std::to_string(n));
    }
    DegreeSequence d(static_cast<std::size_t>(n), k);
    for (int i = 0; i < k; ++i) d[i] = n - 1;
    return d;
}

DegreeSequence path_degrees(int k, int n) {
    if (k < 1 || n < k) {
        throw IndexError("path_degrees: need n >= k >= 1, got k = " + std::to_string(k) +
                         ", n = " + std::to_string(n));
    }
    DegreeSequence d(static_cast<std::size_t>(n));
    // 1-based position i, as in the construction v_1..v_n.
    for (int i = 1; i <= n; ++i) {
        int deg;
        if (n >= 2 * k + 1) {
            if (i <= k) deg = k + i - 1;
            else if (i <= n - k) deg = 2 * k;
            else deg = k + n - i;
        } else {
            if (i <= n - k - 1) deg = k + i - 1;
            else if (i <= k + 1) deg = n - 1;
            else deg = k + n - i;
        }
        d[i - 1] = deg;
    }
    return d;
}

namespace {

void check_closed(int k, int n, const char* what) {
    if (k < 1 || n <= k) {
        throw IndexError(std::string(what) + ": need n >= k+1, got k = " + std::to_string(k) +
                         ", n = " + std::to_string(n));
    }
}

// Per-vertex exponent of the family: 1 for PI1C/NK (c applied later), d for PI2.
long long vertex_weight(const IndexParams& p, long long d) {
    return p.family == IndexFamily::PI2 ? d : 1;
}

} // namespace

IndexValue closed_form_star(int k, int n, const IndexParams& p) {
    check_closed(k, n, "closed_form_star");
    FactorList f;
    // k base vertices of degree n-1, n-k leaves of degree k.
    f.add(n - 1, static_cast<long long>(k) * vertex_weight(p, n - 1));
    f.add(k, static_cast<long long>(n - k) * vertex_weight(p, k));
    return evaluate(f, p, EvalMode::both);
}

IndexValue closed_form_path(int k, int n, const IndexParams& p) {
    check_closed(k, n, "closed_form_path");
    FactorList f;
    if (n >= 2 * k + 1) {
        f.add(2 * k, static_cast<long long>(n - 2 * k) * vertex_weight(p, 2 * k));
        for (int i = k; i <= 2 * k - 1; ++i) f.add(i, 2 * vertex_weight(p, i));
    } else {
        f.add(n - 1, static_cast<long long>(2 * k + 2 - n) * vertex_weight(p, n - 1));
        for (int i = k; i <= n - 2; ++i) f.add(i, 2 * vertex_weight(p, i));
    }
    return evaluate(f, p, EvalMode::both);
}

int AuditReport::discrepancies() const {
    int bad = 0;
    for (const auto& e : entries) bad += e.agrees ? 0 : 1;
    return bad;
}

namespace {

std::string render(const IndexValue& v) {
    if (v.exact) return v.exact->str();
    char buf[64];
    std::snprintf(buf, sizeof buf, "10^%.12g", v.log10());
    return buf;
}

std::string render(const std::vector<int>& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ',';
        s += d[i] < 0 ? std::string("?") : std::to_string(d[i]);
    }
    return s + ")";
}

void add_index_entry(AuditReport& r, std::string statement, std::string formula,
                     const FactorList& literal, const IndexParams& p, const Graph& g) {
    const IndexValue lit = evaluate(literal, p, EvalMode::both);
    const IndexValue direct = index_value(g, p, EvalMode::both);
    r.entries.push_back({std::move(statement), std::move(formula), render(lit), render(direct),
                         compare_values(lit, direct) == 0});
}

} // namespace

AuditReport audit_published_formulas(int k, int n, double c) {
    check_closed(k, n, "audit");
    check_c(c);
    AuditReport r{k, n, c, {}};
    const IndexParams p1{IndexFamily::PI1C, c};
    const IndexParams p2{IndexFamily::PI2, 1.0};
    const KTree star = gen_kstar(k, n);
    const KTree path = gen_kpath(k, n);

    {
        std::vector<int> lit(static_cast<std::size_t>(n), k);
        for (int i = 0; i < k; ++i) lit[i] = n - k;
        const auto direct = degree_sequence(star.graph());
        r.entries.push_back({"star.degrees", "d(v_i) = n-k for i<=k; k otherwise", render(lit),
                             render(direct), lit == direct});
    }
    if (n >= 4 || n >= 2 * k + 1) {
        // Published piecewise degrees; positions outside every range stay "?".
        std::vector<int> lit(static_cast<std::size_t>(n), -1);
        for (int i = 1; i <= n; ++i) {
            if (n >= 2 * k + 1) {
                if (i >= 1 && i <= k) lit[i - 1] = k + i - 1;
                if (i >= k + 1 && i <= n - k) lit[i - 1] = 2 * k;
                if (i >= n - k + 1 && i <= n) lit[i - 1] = k + n - i;
            } else {
                if (i >= 1 && i <= n - k - 1) lit[i - 1] = k + i - 1;
                if (i >= n - k && i <= k + 1) lit[i - 1] = n - 1;
                if (i >= k + 2 && i <= n) lit[i - 1] = k + n - i;
            }
        }
        const auto direct = degree_sequence(path.graph());
        r.entries.push_back({"path.degrees",
                             n >= 2 * k + 1 ? "k+i-1 | 2k | k+n-i (n >= 2k+1)"
                                            : "k+i-1 | n-1 | k+n-i (4 <= n <= 2k)",
                             render(lit), render(direct), lit == direct});
    }
    {
        FactorList f;
        f.add(n - k, k);
        f.add(k, n - k);
        add_index_entry(r, "star.pi1c", "(n-k)^(ck) * k^(c(n-k))", f, p1, star.graph());
    }
    {
        FactorList f;
        f.add(n - k, static_cast<long long>(k) * (n - k));
        f.add(k, static_cast<long long>(k) * (n - k));
        add_index_entry(r, "star.pi2", "(n-k)^(k(n-k)) * k^(k(n-k))", f, p2, star.graph());
    }
    if (n <= 2 * k) {
        FactorList f1;
        f1.add(n - 1, 1);
        for (int i = k; i <= n - 2; ++i) f1.add(i, 2);
        add_index_entry(r, "path.pi1c", "(n-1)^c * prod_{i=k}^{n-2} i^(2c)  [k+1 <= n <= 2k]", f1,
                        p1, path.graph());
        FactorList f2;
        f2.add(n - 1, n - 1);
        for (int i = k; i <= n - 2; ++i) f2.add(i, 2 * i);
        add_index_entry(r, "path.pi2", "(n-1)^(n-1) * prod_{i=k}^{n-2} i^(2i)  [k+1 <= n <= 2k]",
                        f2, p2, path.graph());
    } else {
        FactorList f1;
        f1.add(2 * k, n - 2 * k);
        for (int i = k; i <= 2 * k - 1; ++i) f1.add(i, 2);
        add_index_entry(r, "path.pi1c", "(2k)^(c(n-2k)) * prod_{i=k}^{2k-1} i^(2c)  [n >= 2k+1]",
                        f1, p1, path.graph());
        FactorList f2;
        f2.add(2 * k, 2LL * k * (n - 2 * k));
        for (int i = k; i <= 2 * k - 1; ++i) f2.add(i, 2 * i);
        add_index_entry(r, "path.pi2", "(2k)^(2k(n-2k)) * prod_{i=k}^{2k-1} i^(2i)  [n >= 2k+1]",
                        f2, p2, path.graph());
    }
    return r;
}

} // namespace ktz
