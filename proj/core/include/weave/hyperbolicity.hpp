#ifndef WEAVE_HYPERBOLICITY_HPP
#define WEAVE_HYPERBOLICITY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "weave/isotopy.hpp"
#include "weave/matrix.hpp"
#include "weave/moves.hpp"

namespace weave {

/// Volume of the regular ideal octahedron (3.6638 to four decimals).
inline constexpr double kOctahedronVolume = 3.663862376708876;

/**
 * Vertical-order digraph of a diagram: one vertex per component, and for
 * each crossing one edge from the component passing below to the one
 * passing above. Warps occupy vertices 0..m-1, wefts m..m+n-1.
 */
struct LayerDigraph {
    int warps = 0;
    int wefts = 0;
    std::vector<std::pair<int, int>> edges;  // (below, above), one per crossing

    int vertex_count() const { return warps + wefts; }
    ComponentId vertex(int v) const {
        return v < warps ? ComponentId{ComponentKind::Warp, v}
                         : ComponentId{ComponentKind::Weft, v - warps};
    }
};

LayerDigraph layer_digraph(const CrossingMatrix& M);

/**
 * Layering decision with witness. `layers` lists the strongly connected
 * components of the layer digraph bottom to top; the weave is layered
 * exactly when there are at least two. Ties between incomparable layers
 * are broken by the smallest contained component, warps before wefts.
 */
struct LayerVerdict {
    bool layered = false;
    std::vector<std::vector<ComponentId>> layers;
};

/// Throws std::invalid_argument on the empty 0 x 0 weave.
LayerVerdict is_layered(const CrossingMatrix& M);

/// Witness-free layering test; equals is_layered(M).layered.
bool is_layered_flag(const CrossingMatrix& M);

/// Checks the witness against the crossing data: the partition covers every
/// component once and every crossing between distinct layers has the
/// higher-layer component above.
bool verify_layering(const CrossingMatrix& M, const LayerVerdict& v);

/**
 * Two same-kind components with equal crossing functions that interchanges
 * can make cyclically adjacent. `first` and `second` are 0-based positions
 * in the diagram the witness was issued for; replaying `moves` while
 * tracking those two positions leaves them adjacent with equal lines.
 * `arc` (when present) lists the positions cleared between them.
 */
struct ParallelWitness {
    ComponentKind kind = ComponentKind::Warp;
    int first = 0;
    int second = 0;
    std::optional<std::vector<int>> arc;
    MoveSequence moves;
};

/**
 * Arc-criterion search for a reachable parallel pair: a pair of equal
 * same-kind lines qualifies when one of the two cyclic arcs between them
 * holds only lines comparable with the shared crossing function; the
 * witness clears that arc by swapping one endpoint outward. Polynomial in
 * the diagram size. Requires at least one warp and weft.
 */
std::optional<ParallelWitness> parallel_pair_reachable(const CrossingMatrix& M);

/// Witness-free variant of parallel_pair_reachable.
bool has_reachable_parallel_pair(const CrossingMatrix& M);

/**
 * Brute-force validator for the arc criterion: breadth-first search over
 * the interchange orbit (swap moves only), stopping at the first state
 * with a cyclically adjacent equal pair of rows or columns. Throws
 * BudgetExceeded past `cap` states.
 */
std::optional<ParallelWitness> parallel_pair_oracle(const CrossingMatrix& M,
                                                    std::size_t cap = kDefaultOrbitCap);

/// Replays the witness and confirms the tracked pair ends adjacent and equal.
bool verify_parallel_witness(const CrossingMatrix& M, const ParallelWitness& w);

struct HyperbolicityVerdict {
    enum class Kind { Hyperbolic, NotHyperbolicLayered, NotHyperbolicParallel, NotApplicable };

    Kind kind = Kind::NotApplicable;
    std::optional<LayerVerdict> layering;      // NotHyperbolicLayered only
    std::optional<ParallelWitness> parallel;   // NotHyperbolicParallel only

    bool hyperbolic() const { return kind == Kind::Hyperbolic; }
};

/// Diagrams with no warps or no wefts report NotApplicable; otherwise the
/// layering obstruction is checked first, then reachable parallel pairs.
HyperbolicityVerdict is_hyperbolic(const CrossingMatrix& M);

/// Witness-free verdict; equals is_hyperbolic(M).hyperbolic().
bool is_hyperbolic_flag(const CrossingMatrix& M);

/// Hyperbolic weaves admit the cone angle pi structure as well.
bool is_pi_hyperbolic(const CrossingMatrix& M);

/// True when no cyclically adjacent row pair or column pair is comparable.
/// A sufficient condition for hyperbolicity. Requires m, n >= 2.
bool no_adjacent_comparable(const CrossingMatrix& M);

/**
 * One piece of the torus decomposition of the weave complement.
 *
 * Weave pieces carry their sub-diagram; slots whose id is absent are cores
 * of collapsed parallel families, not original components. Family pieces
 * record the parallel strands enclosed in the solid torus.
 */
struct JsjPiece {
    enum class Type { HyperbolicWeave, AxisOnlyWeave, SolidTorusParallelFamily };

    Type type;

    // HyperbolicWeave / AxisOnlyWeave
    CrossingMatrix matrix;
    std::vector<std::optional<ComponentId>> warp_ids;
    std::vector<std::optional<ComponentId>> weft_ids;

    // SolidTorusParallelFamily
    ComponentKind family_kind = ComponentKind::Warp;
    int multiplicity = 0;
    std::vector<ComponentId> members;
};

struct JsjReport {
    std::vector<JsjPiece> pieces;
};

/**
 * Decomposes the complement by alternating two reductions to a fixpoint:
 * split along the layering witness (grouping consecutive single-kind
 * layers into one axis block), then collapse every interchange-reachable
 * family of k >= 2 mutually parallel components into a core, emitting one
 * solid-torus piece per family. Pieces appear bottom to top, each
 * sub-weave's family pieces before its remainder. Every original
 * component is claimed by exactly one piece.
 */
JsjReport jsj_report(const CrossingMatrix& M);

/// m * n * kOctahedronVolume.
double volume_upper_bound(int warps, int wefts);
double volume_upper_bound(const CrossingMatrix& M);

}  // namespace weave

#endif  // WEAVE_HYPERBOLICITY_HPP
