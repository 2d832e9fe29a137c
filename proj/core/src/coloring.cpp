#include "kecs/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "kecs/error.hpp"

namespace kecs {

namespace {

std::atomic<std::uint64_t> g_stamp_counter{0};

std::uint64_t next_stamp() { return ++g_stamp_counter; }

} // namespace

std::string to_string(ColorSet s)
{
    std::string out = "{";
    bool first = true;
    for (Color c : s.members()) {
        if (!first)
            out += ",";
        out += std::to_string(c);
        first = false;
    }
    return out + "}";
}

PartialColoring::PartialColoring(const MultiGraph& g, int k)
    : g_(&g), k_(k), stamp_(next_stamp()), color_(g.num_edges(), kUncolored), used_(g.num_vertices()),
      at_(static_cast<std::size_t>(g.num_vertices()) * (k + 1), kNoEdge)
{
    if (k < 1 || k > kMaxPalette)
        throw Error(Errc::BadDimensions, "palette size " + std::to_string(k) + " outside 1.." +
                                             std::to_string(kMaxPalette));
}

PartialColoring PartialColoring::from_colors(const MultiGraph& g, int k, const std::vector<Color>& colors)
{
    if (static_cast<int>(colors.size()) != g.num_edges())
        throw Error(Errc::BadDimensions, "expected " + std::to_string(g.num_edges()) + " colors, got " +
                                             std::to_string(colors.size()));
    PartialColoring c(g, k);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (colors[e] != kUncolored)
            c.assign(e, colors[e]);
    return c;
}

void PartialColoring::touch() { stamp_ = next_stamp(); }

void PartialColoring::assign(EdgeId e, Color c)
{
    if (e < 0 || e >= g_->num_edges())
        throw Error(Errc::IndexOutOfRange, "edge " + std::to_string(e));
    if (c < 1 || c > k_)
        throw Error(Errc::ImproperAssignment, "color " + std::to_string(c) + " outside 1.." + std::to_string(k_));
    if (color_[e] == c)
        return;
    const Endpoints ep = g_->endpoints(e);
    for (VertexId x : {ep.u, ep.v}) {
        const EdgeId holder = edge_with(x, c);
        if (holder != kNoEdge && holder != e)
            throw Error(Errc::ImproperAssignment, "color " + std::to_string(c) + " already used at vertex " +
                                                      std::to_string(x) + " by edge " + std::to_string(holder));
    }
    if (color_[e] != kUncolored)
        unassign(e);
    color_[e] = c;
    ++colored_;
    for (VertexId x : {ep.u, ep.v}) {
        used_[x].insert(c);
        at_[static_cast<std::size_t>(x) * (k_ + 1) + c] = e;
    }
    touch();
}

void PartialColoring::unassign(EdgeId e)
{
    if (e < 0 || e >= g_->num_edges())
        throw Error(Errc::IndexOutOfRange, "edge " + std::to_string(e));
    const Color c = color_[e];
    if (c == kUncolored)
        return;
    const Endpoints ep = g_->endpoints(e);
    for (VertexId x : {ep.u, ep.v}) {
        used_[x].erase(c);
        at_[static_cast<std::size_t>(x) * (k_ + 1) + c] = kNoEdge;
    }
    color_[e] = kUncolored;
    --colored_;
    touch();
}

AlternatingPath alternating_path(const PartialColoring& c, Color a, Color b, VertexId x)
{
    if (a == b)
        throw Error(Errc::BothOrNeitherFreeAtStart, "colors must differ");
    const ColorSet fx = c.free(x);
    const bool a_free = fx.contains(a);
    const bool b_free = fx.contains(b);
    if (!a_free && !b_free)
        throw Error(Errc::BothOrNeitherFreeAtStart,
                    "neither " + std::to_string(a) + " nor " + std::to_string(b) + " is free at " + std::to_string(x));
    AlternatingPath p;
    p.a = a;
    p.b = b;
    p.vertices.push_back(x);
    if (a_free && b_free)
        return p;
    const MultiGraph& g = c.graph();
    Color want = a_free ? b : a;
    VertexId at = x;
    while (true) {
        const EdgeId e = c.edge_with(at, want);
        if (e == kNoEdge)
            break;
        at = g.other(e, at);
        p.edges.push_back(e);
        p.vertices.push_back(at);
        want = want == a ? b : a;
    }
    return p;
}

VertexId swap_alternating_path(PartialColoring& c, Color a, Color b, VertexId x)
{
    const AlternatingPath p = alternating_path(c, a, b, x);
    std::vector<Color> old(p.edges.size());
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        old[i] = c.color(p.edges[i]);
        c.unassign(p.edges[i]);
    }
    for (std::size_t i = 0; i < p.edges.size(); ++i)
        c.assign(p.edges[i], old[i] == a ? b : a);
    return p.end();
}

int FreeComponentIndex::nontrivial_count() const
{
    return static_cast<int>(std::count_if(components.begin(), components.end(),
                                          [](const FreeComponent& q) { return q.nontrivial(); }));
}

FreeComponentIndex free_components(const PartialColoring& c)
{
    const MultiGraph& g = c.graph();
    const int n = g.num_vertices();
    FreeComponentIndex idx;
    idx.component_of_vertex.assign(n, -1);
    idx.component_of_edge.assign(g.num_edges(), -1);

    std::vector<bool> member(n, false);
    for (VertexId v = 0; v < n; ++v)
        if (!c.free(v).empty())
            member[v] = true;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (!c.is_colored(e))
            member[g.endpoints(e).u] = member[g.endpoints(e).v] = true;

    std::vector<VertexId> queue;
    for (VertexId root = 0; root < n; ++root) {
        if (!member[root] || idx.component_of_vertex[root] != -1)
            continue;
        const int id = static_cast<int>(idx.components.size());
        FreeComponent q;
        queue.assign(1, root);
        idx.component_of_vertex[root] = id;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const VertexId v = queue[head];
            q.vertices.push_back(v);
            q.free_union |= c.free(v);
            for (EdgeId e : g.incident(v)) {
                if (c.is_colored(e))
                    continue;
                if (idx.component_of_edge[e] == -1) {
                    idx.component_of_edge[e] = id;
                    q.edges.push_back(e);
                }
                const VertexId w = g.other(e, v);
                if (idx.component_of_vertex[w] == -1) {
                    idx.component_of_vertex[w] = id;
                    queue.push_back(w);
                }
            }
        }
        std::sort(q.vertices.begin(), q.vertices.end());
        std::sort(q.edges.begin(), q.edges.end());
        q.cycles = static_cast<int>(q.edges.size()) - static_cast<int>(q.vertices.size()) + 1;
        idx.components.push_back(std::move(q));
    }
    return idx;
}

Fan build_maximal_fan(const PartialColoring& c, VertexId x, EdgeId e)
{
    const MultiGraph& g = c.graph();
    if (x < 0 || x >= g.num_vertices() || e < 0 || e >= g.num_edges() || !g.endpoints(e).has(x))
        throw Error(Errc::IndexOutOfRange, "edge " + std::to_string(e) + " not incident to " + std::to_string(x));
    if (c.is_colored(e))
        throw Error(Errc::EdgeNotUncolored, "edge " + std::to_string(e) + " has color " + std::to_string(c.color(e)));
    Fan f;
    f.center = x;
    f.stamp = c.stamp();
    auto push = [&](EdgeId edge, int pred) {
        const VertexId y = g.other(edge, x);
        f.edges.push_back(edge);
        f.ends.push_back(y);
        f.pred.push_back(pred);
        f.full.push_back(c.free(y).empty());
    };
    push(e, -1);
    ColorSet reach = c.free(f.ends[0]);
    std::vector<bool> in_fan(g.num_edges(), false);
    in_fan[e] = true;
    while (true) {
        EdgeId best = kNoEdge;
        for (Color col : reach.members()) {
            const EdgeId cand = c.edge_with(x, col);
            if (cand != kNoEdge && !in_fan[cand] && (best == kNoEdge || cand < best))
                best = cand;
        }
        if (best == kNoEdge)
            break;
        const Color col = c.color(best);
        int pred = 0;
        while (!c.free(f.ends[pred]).contains(col))
            ++pred;
        in_fan[best] = true;
        push(best, pred);
        reach |= c.free(f.ends.back());
    }
    return f;
}

Fan build_maximal_fan_to(const PartialColoring& c, VertexId x, VertexId y)
{
    const MultiGraph& g = c.graph();
    if (x < 0 || x >= g.num_vertices())
        throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(x));
    for (EdgeId e : g.incident(x))
        if (g.other(e, x) == y && !c.is_colored(e))
            return build_maximal_fan(c, x, e);
    throw Error(Errc::EdgeNotUncolored, "no uncolored edge joins " + std::to_string(x) + " and " + std::to_string(y));
}

bool fan_is_valid(const PartialColoring& c, const Fan& f)
{
    const MultiGraph& g = c.graph();
    if (f.size() == 0 || c.is_colored(f.edges[0]) || f.pred[0] != -1)
        return false;
    for (int i = 0; i < f.size(); ++i) {
        if (!g.endpoints(f.edges[i]).has(f.center) || g.other(f.edges[i], f.center) != f.ends[i])
            return false;
        if (f.full[i] != c.free(f.ends[i]).empty())
            return false;
        if (i == 0)
            continue;
        if (f.pred[i] < 0 || f.pred[i] >= i || !c.is_colored(f.edges[i]))
            return false;
        if (!c.free(f.ends[f.pred[i]]).contains(c.color(f.edges[i])))
            return false;
    }
    return true;
}

void rotate_fan(PartialColoring& c, const Fan& f, int i)
{
    if (f.stamp != c.stamp())
        throw Error(Errc::StaleFan, "coloring changed since the fan was built");
    if (i < 0 || i >= f.size())
        throw Error(Errc::IndexOutOfRange, "fan index " + std::to_string(i));
    if (i == 0)
        return;
    std::vector<int> chain;
    for (int j = i; j != -1; j = f.pred[j])
        chain.push_back(j);
    std::vector<Color> old(chain.size());
    for (std::size_t j = 0; j < chain.size(); ++j)
        old[j] = c.color(f.edges[chain[j]]);
    for (int j : chain)
        c.unassign(f.edges[j]);
    for (std::size_t j = 0; j + 1 < chain.size(); ++j)
        c.assign(f.edges[chain[j + 1]], old[j]);
}

bool is_stable_fan(const PartialColoring& c, const Fan& f)
{
    const MultiGraph& g = c.graph();
    const FreeComponentIndex idx = free_components(c);
    const int qid = idx.component_of_edge[f.edges[0]];
    const FreeComponent& q = idx.components[qid];
    if (q.edges.size() == 1)
        return true;
    // Components of Q - xy1 by union-find over its remaining edges.
    std::vector<int> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (EdgeId e : q.edges)
        if (e != f.edges[0])
            parent[find(g.endpoints(e).u)] = find(g.endpoints(e).v);
    int root = -1;
    for (EdgeId e : q.edges) {
        if (e == f.edges[0])
            continue;
        const int r = find(g.endpoints(e).u);
        if (root == -1)
            root = r;
        else if (root != r)
            return false;
    }
    if (root == -1)
        return true;
    return find(f.center) == root;
}

Validation validate_assignment(const MultiGraph& g, int k, const std::vector<Color>& colors)
{
    if (static_cast<int>(colors.size()) != g.num_edges())
        return {false, "assignment has " + std::to_string(colors.size()) + " entries for " +
                           std::to_string(g.num_edges()) + " edges"};
    std::vector<ColorSet> seen(g.num_vertices());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Color col = colors[e];
        if (col == kUncolored)
            continue;
        if (col < 1 || col > k)
            return {false, "edge " + std::to_string(e) + " has color " + std::to_string(col) + " outside 1.." +
                               std::to_string(k)};
        for (VertexId x : {g.endpoints(e).u, g.endpoints(e).v}) {
            if (seen[x].contains(col))
                return {false, "color " + std::to_string(col) + " repeats at vertex " + std::to_string(x)};
            seen[x].insert(col);
        }
    }
    return {};
}

Validation validate_coloring(const MultiGraph& g, const PartialColoring& c)
{
    if (&g != &c.graph() && (g.num_edges() != c.graph().num_edges() || g.num_vertices() != c.graph().num_vertices()))
        return {false, "coloring belongs to a different graph"};
    Validation v = validate_assignment(g, c.palette(), c.colors());
    if (!v)
        return v;
    int colored = 0;
    for (VertexId x = 0; x < g.num_vertices(); ++x) {
        ColorSet used;
        for (EdgeId e : g.incident(x)) {
            if (c.color(e) == kUncolored)
                continue;
            used.insert(c.color(e));
            if (c.edge_with(x, c.color(e)) != e)
                return {false, "color index at vertex " + std::to_string(x) + " is stale"};
        }
        if (used != c.used(x))
            return {false, "used-color cache at vertex " + std::to_string(x) + " is stale"};
        for (Color col = 1; col <= c.palette(); ++col)
            if (!used.contains(col) && c.edge_with(x, col) != kNoEdge)
                return {false, "color index at vertex " + std::to_string(x) + " has a phantom entry"};
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        colored += c.is_colored(e) ? 1 : 0;
    if (colored != c.colored_count())
        return {false, "colored count cache is stale"};
    return {};
}

} // namespace kecs
