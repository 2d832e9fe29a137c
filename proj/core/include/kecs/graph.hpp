#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace kecs {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr EdgeId kNoEdge = -1;
inline constexpr VertexId kNoVertex = -1;

struct Endpoints {
    VertexId u = 0;
    VertexId v = 0;

    VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
    bool has(VertexId x) const noexcept { return x == u || x == v; }
    friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

/// Undirected loopless multigraph. Parallel edges are distinct EdgeIds; the
/// simple flag only promises that none exist. Immutable once built.
class MultiGraph {
public:
    MultiGraph() = default;

    int num_vertices() const noexcept { return n_; }
    int num_edges() const noexcept { return static_cast<int>(ends_.size()); }
    int max_degree() const noexcept { return max_degree_; }
    bool simple() const noexcept { return simple_; }

    int degree(VertexId v) const { return offset_[v + 1] - offset_[v]; }
    Endpoints endpoints(EdgeId e) const { return ends_[e]; }
    VertexId other(EdgeId e, VertexId x) const { return ends_[e].other(x); }
    const std::vector<Endpoints>& edges() const noexcept { return ends_; }

    /// Incident edges of v in increasing EdgeId order.
    std::span<const EdgeId> incident(VertexId v) const
    {
        return {incidence_.data() + offset_[v], incidence_.data() + offset_[v + 1]};
    }

    /// Number of edges joining u and v.
    int multiplicity(VertexId u, VertexId v) const;
    /// Lowest EdgeId joining u and v, or kNoEdge.
    EdgeId find_edge(VertexId u, VertexId v) const;
    bool has_parallel_edges() const;

    friend MultiGraph build_graph(int n, std::span<const std::pair<int, int>> edges, bool simple);

private:
    int n_ = 0;
    int max_degree_ = 0;
    bool simple_ = true;
    std::vector<Endpoints> ends_;
    std::vector<int> offset_{0};
    std::vector<EdgeId> incidence_;
};

/// Validates and builds. Throws IndexOutOfRange, LoopEdge, or
/// DuplicateEdgeInSimpleMode.
MultiGraph build_graph(int n, std::span<const std::pair<int, int>> edges, bool simple);
MultiGraph build_graph(int n, std::initializer_list<std::pair<int, int>> edges, bool simple);

/// Same graph with edges renumbered; `keep[e]` selects which survive. The
/// returned map sends new EdgeIds to old ones.
std::pair<MultiGraph, std::vector<EdgeId>> edge_subgraph(const MultiGraph& g,
                                                         const std::vector<bool>& keep);

/// Induced on the listed vertices (renumbered in list order).
struct Subgraph {
    MultiGraph graph;
    std::vector<VertexId> vertex_origin;
    std::vector<EdgeId> edge_origin;
};
Subgraph induced_by_edges(const MultiGraph& g, std::span<const EdgeId> edges);

} // namespace kecs
