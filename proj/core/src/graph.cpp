#include "kecs/graph.hpp"

#include <algorithm>
#include <string>

#include "kecs/error.hpp"

namespace kecs {

MultiGraph build_graph(int n, std::span<const std::pair<int, int>> edges, bool simple)
{
    if (n < 0)
        throw Error(Errc::IndexOutOfRange, "negative vertex count");
    MultiGraph g;
    g.n_ = n;
    g.simple_ = simple;
    g.ends_.reserve(edges.size());
    std::vector<int> deg(n, 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [u, v] = edges[i];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(Errc::IndexOutOfRange,
                        "edge " + std::to_string(i) + " has endpoint outside [0," + std::to_string(n) + ")");
        if (u == v)
            throw Error(Errc::LoopEdge, "edge " + std::to_string(i) + " is a loop at " + std::to_string(u));
        g.ends_.push_back({std::min(u, v), std::max(u, v)});
        ++deg[u];
        ++deg[v];
    }
    if (simple) {
        std::vector<std::pair<int, int>> sorted;
        sorted.reserve(g.ends_.size());
        for (const auto& e : g.ends_)
            sorted.emplace_back(e.u, e.v);
        std::sort(sorted.begin(), sorted.end());
        const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end())
            throw Error(Errc::DuplicateEdgeInSimpleMode,
                        "pair (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ") repeated");
    }
    g.offset_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v)
        g.offset_[v + 1] = g.offset_[v] + deg[v];
    g.incidence_.assign(g.offset_[n], kNoEdge);
    std::vector<int> fill(g.offset_.begin(), g.offset_.end() - 1);
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.ends_.size()); ++e) {
        g.incidence_[fill[g.ends_[e].u]++] = e;
        g.incidence_[fill[g.ends_[e].v]++] = e;
    }
    g.max_degree_ = n == 0 ? 0 : *std::max_element(deg.begin(), deg.end());
    return g;
}

MultiGraph build_graph(int n, std::initializer_list<std::pair<int, int>> edges, bool simple)
{
    return build_graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()), simple);
}

int MultiGraph::multiplicity(VertexId u, VertexId v) const
{
    int count = 0;
    for (EdgeId e : incident(u))
        if (ends_[e].other(u) == v)
            ++count;
    return count;
}

EdgeId MultiGraph::find_edge(VertexId u, VertexId v) const
{
    for (EdgeId e : incident(u))
        if (ends_[e].other(u) == v)
            return e;
    return kNoEdge;
}

bool MultiGraph::has_parallel_edges() const
{
    std::vector<std::pair<int, int>> sorted;
    sorted.reserve(ends_.size());
    for (const auto& e : ends_)
        sorted.emplace_back(e.u, e.v);
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

std::pair<MultiGraph, std::vector<EdgeId>> edge_subgraph(const MultiGraph& g, const std::vector<bool>& keep)
{
    std::vector<std::pair<int, int>> pairs;
    std::vector<EdgeId> origin;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!keep[e])
            continue;
        pairs.emplace_back(g.endpoints(e).u, g.endpoints(e).v);
        origin.push_back(e);
    }
    return {build_graph(g.num_vertices(), pairs, g.simple()), std::move(origin)};
}

Subgraph induced_by_edges(const MultiGraph& g, std::span<const EdgeId> edges)
{
    Subgraph sub;
    std::vector<VertexId> local(g.num_vertices(), kNoVertex);
    std::vector<EdgeId> sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    for (EdgeId e : sorted)
        for (VertexId x : {g.endpoints(e).u, g.endpoints(e).v})
            if (local[x] == kNoVertex)
                sub.vertex_origin.push_back(x), local[x] = 0;
    std::sort(sub.vertex_origin.begin(), sub.vertex_origin.end());
    for (std::size_t i = 0; i < sub.vertex_origin.size(); ++i)
        local[sub.vertex_origin[i]] = static_cast<VertexId>(i);
    std::vector<std::pair<int, int>> pairs;
    for (EdgeId e : sorted) {
        pairs.emplace_back(local[g.endpoints(e).u], local[g.endpoints(e).v]);
        sub.edge_origin.push_back(e);
    }
    sub.graph = build_graph(static_cast<int>(sub.vertex_origin.size()), pairs, g.simple());
    return sub;
}

} // namespace kecs
