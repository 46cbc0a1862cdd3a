#ifndef KTZ_ENUMERATE_HPP
#define KTZ_ENUMERATE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ktz/indices.hpp"
#include "ktz/ktree.hpp"

namespace ktz {

class EnumerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class CensusMethod { growth, filter, canonical_growth };

std::string to_string(CensusMethod m);

/// Census of k-trees on n vertices.
///
/// Labeled methods fill `labeled` with one upper-triangle edge mask per
/// labeled k-tree (bit index of pair (u, v), u < v, is v(v-1)/2 + u).
/// `representatives` holds one canonically labeled k-tree per isomorphism
/// class once unlabeled_representatives (or the canonical growth) has run.
struct EnumerationReport {
    int k = 0;
    int n = 0;
    CensusMethod method = CensusMethod::growth;
    std::uint64_t labeled_count = 0;
    std::uint64_t unlabeled_count = 0;
    std::vector<std::uint64_t> labeled;
    std::vector<KTree> representatives;
    std::vector<std::string> canonical;
    /// Labeled members per class, parallel to representatives.
    std::vector<std::uint64_t> class_sizes;
};

inline constexpr std::uint64_t kDefaultLabeledBound = 1'000'000;
inline constexpr std::uint64_t kDefaultFilterBudget = 10'000'000;
/// Labeled censuses store edge masks in 64 bits.
inline constexpr int kMaxLabeledN = 11;

std::uint64_t edge_bit(Vertex u, Vertex v);
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_from_graph(const Graph& g);

/// All labeled k-trees on {0..n-1}: every K_k, grown by attaching unused
/// vertices to k-cliques, deduplicated by (vertex set, edge set) per level.
/// Throws when a level holds more than `bound` graphs.
EnumerationReport enumerate_labeled_growth(int k, int n, std::uint64_t bound = kDefaultLabeledBound);

/// Every n-vertex graph with C(k,2)+k(n-k) edges that recognize accepts.
/// Throws when the number of candidate edge sets exceeds `budget`.
EnumerationReport enumerate_labeled_filter(int k, int n, std::uint64_t budget = kDefaultFilterBudget);

/// Collapses a labeled census to isomorphism classes, counting members.
EnumerationReport unlabeled_representatives(const EnumerationReport& report,
                                            int bound = default_canon_bound());

/// Isomorphism classes directly: every class on n vertices arises by
/// attaching a vertex to a k-clique of a class on n-1 vertices.
/// labeled_count is filled by orbit counting, n! / |Aut|.
EnumerationReport enumerate_unlabeled(int k, int n, int bound = default_canon_bound());

struct ClassValue {
    std::size_t cls = 0;
    IndexValue value;
};

struct ExtremalScan {
    IndexParams params;
    std::vector<ClassValue> values;
    std::size_t argmin = 0;
    std::size_t argmax = 0;
    bool min_unique = true;
    bool max_unique = true;
    /// Pairs of distinct classes whose values compare equal.
    std::vector<std::pair<std::size_t, std::size_t>> ties;
};

/// Index value of every class with the extremal classes and their uniqueness.
ExtremalScan extremal_scan(const EnumerationReport& census, const IndexParams& params);

/// Index of the class isomorphic to `g`, or -1.
int find_class(const EnumerationReport& census, const Graph& g, int bound = default_canon_bound());

/// One line per representative: "n k | u-v,u-v,...".
void write_census(std::ostream& out, const EnumerationReport& r);
/// {"k":..,"n":..,"labeled":..,"unlabeled":..,"method":..}
std::string census_summary_json(const EnumerationReport& r);

} // namespace ktz

#endif // KTZ_ENUMERATE_HPP
