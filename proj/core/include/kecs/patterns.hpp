#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "kecs/graph.hpp"

namespace kecs {

/// Named fixed graphs: "G3", "B3", "Gstar5", "K2".."K8". Throws UnknownPattern.
MultiGraph pattern_graph(std::string_view name);

/// Vertex bijection a -> b preserving edge multiplicities, if one exists.
/// Backtracking with degree pruning; intended for graphs of a dozen vertices.
std::optional<std::vector<VertexId>> find_isomorphism(const MultiGraph& a, const MultiGraph& b);

/// Edge bijection a -> b induced by a vertex isomorphism (parallel edges
/// matched in EdgeId order).
std::vector<EdgeId> edge_map_from_vertex_map(const MultiGraph& a, const MultiGraph& b,
                                             const std::vector<VertexId>& vmap);

bool isomorphic(const MultiGraph& a, const MultiGraph& b);
bool match_small_pattern(const MultiGraph& g, std::string_view pattern);

MultiGraph complete_graph(int n);

} // namespace kecs
