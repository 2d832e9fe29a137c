#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "kecs/coloring.hpp"
#include "kecs/decompose.hpp"
#include "kecs/graph.hpp"

namespace kecs::test {

inline int count_colored(const std::vector<Color>& colors)
{
    return static_cast<int>(std::count_if(colors.begin(), colors.end(), [](Color c) { return c != kUncolored; }));
}

// Edges of g whose endpoints both lie in `vertices`.
inline std::vector<EdgeId> edges_within(const MultiGraph& g, const std::vector<VertexId>& vertices)
{
    std::vector<bool> in(g.num_vertices());
    for (VertexId v : vertices)
        in[v] = true;
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (in[g.endpoints(e).u] && in[g.endpoints(e).v])
            out.push_back(e);
    return out;
}

inline int count_components(const MultiGraph& g)
{
    return decompose(g).num_components;
}

// g with one edge removed.
inline MultiGraph without_edge(const MultiGraph& g, EdgeId drop)
{
    std::vector<bool> keep(g.num_edges(), true);
    keep[drop] = false;
    return edge_subgraph(g, keep).first;
}

// g with its vertices renamed by perm (old -> new).
inline MultiGraph relabel(const MultiGraph& g, const std::vector<int>& perm)
{
    std::vector<std::pair<int, int>> pairs;
    for (const Endpoints& e : g.edges())
        pairs.emplace_back(perm[e.u], perm[e.v]);
    return build_graph(g.num_vertices(), pairs, g.simple());
}

} // namespace kecs::test
