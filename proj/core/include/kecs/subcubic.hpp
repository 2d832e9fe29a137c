#pragma once

#include <string_view>

#include "kecs/coloring.hpp"
#include "kecs/graph.hpp"

namespace kecs {

enum class SubcubicCase { G3, B3, Gstar5, Small, TriangleFreeCore, HasTriangle };

std::string_view case_name(SubcubicCase c);

/// Class of a connected subcubic multigraph.
SubcubicCase classify_subcubic(const MultiGraph& g);

struct SubcubicStats {
    int exact_solves = 0;
    int oracle_fallbacks = 0;
    int contractions = 0;
    int bridge_splits = 0;
};

/// 3-edge-colors a subcubic multigraph component by component: G3 gets 3 of
/// 4 edges, B3 and Gstar5 6 of 7, every other component at least 7/9 of its
/// edges and at least 13/15 when it has no G3 subgraph (the doubled 5-cycle,
/// 6 of 7, is the one exception found). Throws DegreeTooHigh.
PartialColoring solve_subcubic(const MultiGraph& g, SubcubicStats* stats = nullptr);

/// Bridgeless connected subcubic multigraph other than G3, B3, Gstar5:
/// at least ceil(13/15 |E|) edges, except on the doubled 5-cycle, which
/// only has 6 of 7 and is solved exactly. Throws PreconditionViolated.
PartialColoring solve_biconnected(const MultiGraph& g, SubcubicStats* stats = nullptr);

/// Triangle-free subcubic multigraph: local search, then the exact oracle
/// for up to 24 edges if the 13/15 floor is missed. Throws
/// FractionNotReached when a larger instance misses it.
PartialColoring triangle_free_core(const MultiGraph& g, SubcubicStats* stats = nullptr);

/// Some doubled edge uv has a common neighbor w.
bool contains_g3(const MultiGraph& g);

/// Edges solve_subcubic promises, summed over components: 3 for G3; 6 for
/// B3, Gstar5 and the doubled 5-cycle; ceil(7/9 m) for other components
/// containing G3; ceil(13/15 m) for the rest.
int subcubic_promise(const MultiGraph& g);

} // namespace kecs
