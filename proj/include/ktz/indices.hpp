#ifndef KTZ_INDICES_HPP
#define KTZ_INDICES_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ktz/graph.hpp"

namespace ktz {

using BigInt = boost::multiprecision::cpp_int;

class IndexError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class IndexFamily { PI1C, PI2, NK };

std::string to_string(IndexFamily f);
IndexFamily parse_family(const std::string& s);

struct IndexParams {
    IndexFamily family = IndexFamily::PI1C;
    /// Exponent for PI1C; ignored by PI2 and NK.
    double c = 1.0;
};

enum class EvalMode { exact, log, both };

/// An index value held exactly, as a natural log, or both.
struct IndexValue {
    std::optional<BigInt> exact;
    std::optional<double> logval;

    /// Natural log, derived from the exact value when no log was computed.
    double ln() const;
    double log10() const;
    std::string decimal() const;
};

/// Exact integer exponent when c is a small positive integer.
std::optional<unsigned> integral_exponent(double c);

double ln_bigint(const BigInt& x);

/// Product of d(v)^c. Exact only for integer c.
IndexValue index_pi1c(const Graph& g, double c, EvalMode mode = EvalMode::both);
/// Product of d(u)d(v) over edges; exact mode also forms the product of
/// d(v)^d(v) and requires the two to agree.
IndexValue index_pi2(const Graph& g, EvalMode mode = EvalMode::both);
/// Narumi-Katayama product of degrees.
IndexValue index_nk(const Graph& g, EvalMode mode = EvalMode::both);

IndexValue index_value(const Graph& g, const IndexParams& p, EvalMode mode = EvalMode::both);
/// Same computations from a degree sequence alone (PI2 via the vertex form).
IndexValue index_from_degrees(std::span<const int> degrees, const IndexParams& p,
                              EvalMode mode = EvalMode::both);

/// Exact when both sides are exact, otherwise log-domain with absolute
/// tolerance 1e-9 (within tolerance compares equal).
std::weak_ordering compare_values(const IndexValue& a, const IndexValue& b);

inline constexpr double kLogTolerance = 1e-9;

/// Degrees of S_{k,n-k}: n-1 on the base clique, k on the leaves.
DegreeSequence star_degrees(int k, int n);
/// Degrees of P_n^k in vertex order.
DegreeSequence path_degrees(int k, int n);

IndexValue closed_form_star(int k, int n, const IndexParams& p);
IndexValue closed_form_path(int k, int n, const IndexParams& p);

struct AuditEntry {
    /// What is being checked, e.g. "star.pi1c" or "path.degrees".
    std::string statement;
    /// The published formula, evaluated verbatim for `literal`.
    std::string formula;
    std::string literal;
    std::string direct;
    bool agrees = false;
};

struct AuditReport {
    int k = 0;
    int n = 0;
    double c = 1.0;
    std::vector<AuditEntry> entries;

    int discrepancies() const;
};

/// Evaluates the published degree and closed-form statements for the k-star
/// and k-path verbatim and compares them with direct computation on the
/// generated graphs. Never throws on disagreement; it only reports.
AuditReport audit_published_formulas(int k, int n, double c);

} // namespace ktz

#endif // KTZ_INDICES_HPP
