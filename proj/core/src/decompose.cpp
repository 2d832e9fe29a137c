#include "kecs/decompose.hpp"

#include <algorithm>
#include <string>

#include "kecs/error.hpp"

namespace kecs {

Decomposition decompose(const MultiGraph& g)
{
    const int n = g.num_vertices();
    const int m = g.num_edges();
    Decomposition d;
    d.component_of.assign(n, -1);
    d.block_of_edge.assign(m, -1);

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<bool> is_cut(n, false);
    std::vector<EdgeId> edge_stack;
    int timer = 0;

    struct Frame {
        VertexId v;
        EdgeId parent_edge;
        std::size_t next;
        int children;
    };
    std::vector<Frame> stack;

    for (VertexId root = 0; root < n; ++root) {
        if (disc[root] != -1)
            continue;
        const int comp = d.num_components++;
        disc[root] = low[root] = timer++;
        d.component_of[root] = comp;
        stack.push_back({root, kNoEdge, 0, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto inc = g.incident(f.v);
            if (f.next < inc.size()) {
                const EdgeId e = inc[f.next++];
                if (e == f.parent_edge)
                    continue;
                const VertexId w = g.other(e, f.v);
                if (disc[w] == -1) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = timer++;
                    d.component_of[w] = comp;
                    ++f.children;
                    stack.push_back({w, e, 0, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back(e);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (stack.empty())
                break;
            const VertexId parent = stack.back().v;
            low[parent] = std::min(low[parent], low[done.v]);
            if (low[done.v] >= disc[parent]) {
                // parent separates done.v's subtree: pop one block.
                std::vector<EdgeId> block;
                while (true) {
                    const EdgeId e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e);
                    if (e == done.parent_edge)
                        break;
                }
                std::sort(block.begin(), block.end());
                const int id = static_cast<int>(d.blocks.size());
                for (EdgeId e : block)
                    d.block_of_edge[e] = id;
                if (block.size() == 1)
                    d.bridges.push_back(block.front());
                d.blocks.push_back(std::move(block));
                if (stack.size() > 1 || stack.back().children > 1)
                    is_cut[parent] = true;
            }
        }
    }
    std::sort(d.bridges.begin(), d.bridges.end());
    for (VertexId v = 0; v < n; ++v)
        if (is_cut[v])
            d.cut_vertices.push_back(v);
    return d;
}

std::vector<std::vector<VertexId>> component_vertices(const MultiGraph& g)
{
    const Decomposition d = decompose(g);
    std::vector<std::vector<VertexId>> out(d.num_components);
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        out[d.component_of[v]].push_back(v);
    return out;
}

Contraction contract_triangle(const MultiGraph& g, std::array<VertexId, 3> t)
{
    std::sort(t.begin(), t.end());
    for (VertexId v : t)
        if (v < 0 || v >= g.num_vertices())
            throw Error(Errc::IndexOutOfRange, "triangle vertex " + std::to_string(v));
    if (t[0] == t[1] || t[1] == t[2])
        throw Error(Errc::NotATriangle, "repeated vertex");
    for (auto [a, b] : {std::pair{t[0], t[1]}, std::pair{t[1], t[2]}, std::pair{t[0], t[2]}}) {
        const int mult = g.multiplicity(a, b);
        if (mult == 0)
            throw Error(Errc::NotATriangle,
                        "vertices " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
        if (mult > 1)
            throw Error(Errc::DoubledTriangleEdge,
                        "edge " + std::to_string(a) + "-" + std::to_string(b) + " has multiplicity " +
                            std::to_string(mult));
    }
    Contraction out;
    std::vector<VertexId> local(g.num_vertices(), kNoVertex);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (v == t[1] || v == t[2])
            continue;
        local[v] = static_cast<VertexId>(out.vertex_origin.size());
        out.vertex_origin.push_back(v);
    }
    out.merged = local[t[0]];
    local[t[1]] = local[t[2]] = out.merged;
    auto in_t = [&](VertexId v) { return v == t[0] || v == t[1] || v == t[2]; };
    std::vector<std::pair<int, int>> pairs;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Endpoints ep = g.endpoints(e);
        if (in_t(ep.u) && in_t(ep.v))
            continue;
        pairs.emplace_back(local[ep.u], local[ep.v]);
        out.edge_origin.push_back(e);
    }
    const MultiGraph probe = build_graph(static_cast<int>(out.vertex_origin.size()), pairs, false);
    out.graph = probe.has_parallel_edges() ? probe
                                           : build_graph(static_cast<int>(out.vertex_origin.size()), pairs, true);
    return out;
}

bool find_triangle(const MultiGraph& g, std::array<VertexId, 3>& out)
{
    const int n = g.num_vertices();
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) {
            if (g.multiplicity(a, b) == 0)
                continue;
            for (VertexId c = b + 1; c < n; ++c)
                if (g.multiplicity(a, c) > 0 && g.multiplicity(b, c) > 0) {
                    out = {a, b, c};
                    return true;
                }
        }
    return false;
}

} // namespace kecs
