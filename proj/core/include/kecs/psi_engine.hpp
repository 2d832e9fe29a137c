#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kecs/coloring.hpp"
#include "kecs/graph.hpp"
#include "kecs/rational.hpp"

namespace kecs {

/// Lexicographic potential: colored count, then free-component counts from
/// the largest tracked size (floor(delta/2) edges) down to one edge, then
/// cycles over all free components, then delta*|V| minus the free colors of
/// nontrivial components. Larger is better in every coordinate.
struct Potential {
    int colored = 0;
    /// by_size[0] counts components with floor(delta/2) edges, the last entry those with 1.
    std::vector<int> by_size;
    int cycles = 0;
    int free_deficit = 0;

    std::string str() const;
    friend auto operator<=>(const Potential&, const Potential&) = default;
    friend bool operator==(const Potential&, const Potential&) = default;
};

/// Throws PaletteMismatch unless c.palette() == g.max_degree().
Potential potential(const MultiGraph& g, const PartialColoring& c);

enum class MoveKind {
    VizingAugment,       // M0
    SharedFreeColor,     // M1
    SeeingComponents,    // M2
    FanMerge,            // M3
    CycleRotation,       // M4
    FreeColorRepair,     // M5
    FullComponentRepair, // M6
    DenseRepair,         // M7
};

std::string_view move_name(MoveKind kind);

struct Move {
    MoveKind kind = MoveKind::VizingAugment;
    /// Edges whose color differs between the two colorings.
    std::vector<EdgeId> edges;
    Potential before;
    Potential after;
};

/// Colors the uncolored edge e through a fan at either endpoint, possibly
/// after one alternating-path swap. Returns the improved coloring (one more
/// colored edge) or nothing.
std::optional<PartialColoring> vizing_augment(const MultiGraph& g, const PartialColoring& c, EdgeId e);

/// First applicable move in priority order M0..M7, already verified to raise Psi.
std::optional<std::pair<Move, PartialColoring>> improve_once(const MultiGraph& g, const PartialColoring& c);

struct PsiOptions {
    /// 0 selects 10*|E|*(|E|+|V|)^floor(delta/2), saturating.
    std::int64_t iteration_cap = 0;
    /// Print one trace line per applied move to `trace_stream`.
    bool verbose = false;
    std::ostream* trace_stream = nullptr;
    std::function<void(const Move&)> observer;
    bool keep_trace = true;
};

struct PsiResult {
    PartialColoring coloring;
    std::vector<Move> trace;
    std::int64_t iterations = 0;
};

std::int64_t default_iteration_cap(const MultiGraph& g);

/// Runs improve_once from the empty coloring to a fixpoint. Throws
/// IterationCapExceeded if the cap is hit.
PsiResult maximize_psi_run(const MultiGraph& g, const PsiOptions& options = {});
/// Same, starting from `start` (palette must equal the maximum degree).
PsiResult maximize_psi_from(const MultiGraph& g, const PartialColoring& start, const PsiOptions& options = {});
PartialColoring maximize_psi(const MultiGraph& g);

/// Colored fraction promised for maximum degree delta in 3..7. With
/// `exception` set, delta 3, 4 and 6 fall back to delta/(delta+1).
/// Throws UnsupportedDelta.
Rational guaranteed_fraction(int delta, bool exception);

/// True for the connected graphs the guarantee excludes: G3, B3, Gstar5
/// (delta 3), K5 (delta 4), K7 (delta 6).
bool is_guarantee_exception(const MultiGraph& g);

/// Coloring of K_n (edges in complete_graph(n) order) with k = n-1 colors:
/// a full round-robin factorization for odd k; for even k, k*k/2 colored
/// edges whose uncolored rest is a matching and whose vertices all have
/// distinct free sets. Throws BadDimensions.
std::vector<Color> clique_color(int n, int k);

} // namespace kecs
