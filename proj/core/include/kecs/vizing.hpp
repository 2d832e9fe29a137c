#pragma once

#include "kecs/coloring.hpp"
#include "kecs/graph.hpp"

namespace kecs {

/// Proper edge coloring of a simple graph with max_degree + 1 colors
/// (Misra-Gries fan rotation). Throws NotSimple on parallel edges.
PartialColoring misra_gries_coloring(const MultiGraph& g);

/// Vizing baseline: color fully with max_degree + 1 colors, then keep the k
/// largest color classes, renamed 1..k. Colors at least
/// k/(max_degree+1) of the edges. Throws NotSimple.
PartialColoring vizing_baseline(const MultiGraph& g, int k);

} // namespace kecs
