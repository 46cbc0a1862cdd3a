#ifndef KTZ_EXTREMAL_HPP
#define KTZ_EXTREMAL_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ktz/enumerate.hpp"
#include "ktz/indices.hpp"
#include "ktz/ktree.hpp"

namespace ktz {

/// x / (x + m); strictly increasing on [0, inf).
double f5_ratio(double x, int m);
/// x^x / (x + m)^(x + m) with 0^0 = 1, evaluated in the log domain;
/// strictly decreasing on [0, inf).
double f6_ratio(double x, int m);

/// toward_star moves concentrate degree (Pi1c down, Pi2 up); toward_path
/// moves spread it (Pi1c up, Pi2 down).
enum class Direction { toward_star, toward_path };

enum class MoveKind {
    /// Simplicial vertices next to a second-layer vertex change one anchor.
    leaf_shift,
    /// A branch inside a hyper pendant is re-anchored onto a lower-degree vertex.
    pendant_straighten,
    /// Branches meeting at a cut clique are merged, strictly or index-neutrally.
    branch_merge,
};

std::string to_string(MoveKind k);
std::string to_string(Direction d);

struct DegreeShift {
    Vertex vertex = -1;
    int delta = 0;
};

/// One rewiring step. `pivots` names the vertices and counts of the
/// construction that produced it (u, v, x, y, v_t, s, s1, m, p, q, ...);
/// `shifts` lists every degree change, which is all the index ratio depends on.
struct RewireMove {
    MoveKind kind = MoveKind::leaf_shift;
    std::string variant;
    std::vector<Edge> remove;
    std::vector<Edge> add;
    std::map<std::string, int> pivots;
    std::vector<DegreeShift> shifts;
    bool neutral = false;
};

/// Natural-log index changes, after minus before.
struct MoveDelta {
    double pi1 = 0;
    double pi2 = 0;
};

struct RejectedMove {
    RewireMove move;
    /// Vertices left when recognition of the rewired graph stalled.
    VertexSet residue;
};

class MoveRejected : public std::runtime_error {
public:
    MoveRejected(const std::string& what, VertexSet residue)
        : std::runtime_error(what), residue_(std::move(residue)) {}
    const VertexSet& residue() const { return residue_; }

private:
    VertexSet residue_;
};

/// All catalog moves whose preconditions hold, each already checked to yield
/// a k-tree. Candidates failing that check go to `rejected` when given.
std::vector<RewireMove> enumerate_moves(const KTree& t, Direction dir,
                                        std::vector<RejectedMove>* rejected = nullptr);

/// Applies (remove, add) and re-certifies the result.
KTree rewire(const KTree& t, const RewireMove& mv);

/// Change predicted by the move's closed ratio, from the shifted degrees only.
MoveDelta predicted_delta(const Graph& g, const RewireMove& mv, double c);

struct AppliedMove {
    KTree tree;
    MoveDelta delta;
    MoveDelta predicted;
};

/// Rewires and measures both index changes by full recomputation.
AppliedMove apply_move(const KTree& t, const RewireMove& mv, double c = 1.0);

enum class Goal { minimize, maximize };

struct Objective {
    IndexParams params;
    Goal goal = Goal::minimize;
};

std::string to_string(Goal g);
/// The catalog whose moves improve the objective.
Direction direction_for(const Objective& obj);

enum class ShapeClass { star, path, star_and_path, other };

std::string to_string(ShapeClass s);

/// k-star test: the k vertices of degree n-1 dominate an independent rest.
bool is_kstar(const Graph& g, int k);
/// k-path test: some ordering puts every edge within distance k.
bool is_kpath(const Graph& g, int k);
ShapeClass classify_shape(const KTree& t);

struct SearchStep {
    RewireMove move;
    IndexValue before;
    IndexValue after;
    MoveDelta delta;
    MoveDelta predicted;
};

struct SearchReport {
    KTree start;
    Objective objective;
    std::vector<SearchStep> steps;
    KTree fixed_point;
    ShapeClass fixed_point_class = ShapeClass::other;
    IndexValue start_value;
    IndexValue final_value;
    /// Moves discarded because the rewired graph was not a k-tree.
    std::vector<RejectedMove> rejected;
};

struct SearchOptions {
    std::size_t max_steps = 100000;
};

/// Repeatedly applies the strictly best catalog move. Index-neutral merges
/// are taken only when nothing improves, each shortening a branch, and never
/// revisit a graph on the same plateau.
SearchReport local_search(const KTree& start, const Objective& objective, const SearchOptions& options = {});

/// One line per move, then a line with the fixed point's class.
void write_trace(std::ostream& out, const SearchReport& r);

struct BoundCheck {
    IndexParams params;
    ExtremalScan scan;
    int star_class = -1;
    int path_class = -1;
    /// Minimum and maximum land on the expected classes.
    bool holds = false;
    bool unique = false;
    /// Only one class exists (n <= k+2), so star and path coincide.
    bool degenerate = false;
};

struct VerificationReport {
    int k = 0;
    int n = 0;
    EnumerationReport census;
    /// Pi1c per requested c: star at the minimum, path at the maximum.
    std::vector<BoundCheck> first_index;
    /// Pi2: path at the minimum, star at the maximum.
    BoundCheck second_index;

    /// No falsified bound; uniqueness is required for n >= k+3.
    bool ok() const;
};

VerificationReport verify_extremal_theorems(int k, int n, const std::vector<double>& c_list,
                                            int bound = default_canon_bound());

} // namespace ktz

#endif // KTZ_EXTREMAL_HPP
