#pragma once

#include <array>
#include <vector>

#include "kecs/graph.hpp"

namespace kecs {

struct Decomposition {
    /// Connected component id per vertex; isolated vertices get their own.
    std::vector<int> component_of;
    int num_components = 0;
    /// Biconnected blocks as edge lists. A bridge forms a one-edge block;
    /// a bundle of parallel edges between two vertices is one block.
    std::vector<std::vector<EdgeId>> blocks;
    std::vector<int> block_of_edge;
    std::vector<EdgeId> bridges;
    std::vector<VertexId> cut_vertices;
};

Decomposition decompose(const MultiGraph& g);

/// Vertex lists per connected component, ordered by lowest member.
std::vector<std::vector<VertexId>> component_vertices(const MultiGraph& g);

struct Contraction {
    MultiGraph graph;
    /// Vertex of `graph` that the triangle collapsed into.
    VertexId merged = kNoVertex;
    /// Old vertex for each new vertex; the merged vertex maps to the lowest triangle vertex.
    std::vector<VertexId> vertex_origin;
    /// Old EdgeId for each new EdgeId.
    std::vector<EdgeId> edge_origin;
};

/// Merges the three triangle vertices into one, dropping the triangle's
/// edges and keeping every other edge (so parallel edges may appear).
/// Throws NotATriangle, or DoubledTriangleEdge when a side has multiplicity > 1.
Contraction contract_triangle(const MultiGraph& g, std::array<VertexId, 3> t);

/// Lexicographically smallest vertex triple spanning a triangle, if any.
bool find_triangle(const MultiGraph& g, std::array<VertexId, 3>& out);

} // namespace kecs
