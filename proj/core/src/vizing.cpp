#include "kecs/vizing.hpp"

#include <algorithm>
#include <numeric>

#include "kecs/error.hpp"

namespace kecs {

namespace {

// Edge x-y in a simple graph.
EdgeId edge_between(const MultiGraph& g, VertexId x, VertexId y) { return g.find_edge(x, y); }

void color_edge(const MultiGraph& g, PartialColoring& c, EdgeId e)
{
    const VertexId u = g.endpoints(e).u;
    const VertexId v = g.endpoints(e).v;

    // Maximal fan at u starting with v.
    std::vector<VertexId> fan{v};
    std::vector<bool> in_fan(g.num_vertices(), false);
    in_fan[v] = true;
    for (bool grew = true; grew;) {
        grew = false;
        const ColorSet last_free = c.free(fan.back());
        for (EdgeId f : g.incident(u)) {
            const VertexId w = g.other(f, u);
            if (!in_fan[w] && c.is_colored(f) && last_free.contains(c.color(f))) {
                fan.push_back(w);
                in_fan[w] = true;
                grew = true;
                break;
            }
        }
    }

    const Color a = c.free(u).lowest();
    const Color b = c.free(fan.back()).lowest();
    if (a != b && !c.free(u).contains(b))
        swap_alternating_path(c, a, b, u);

    // First fan prefix that is still a fan and ends at a vertex missing b.
    std::size_t w = 0;
    for (; w < fan.size(); ++w) {
        if (c.free(fan[w]).contains(b))
            break;
        if (w + 1 < fan.size()) {
            const EdgeId next = edge_between(g, u, fan[w + 1]);
            if (!c.is_colored(next) || !c.free(fan[w]).contains(c.color(next))) {
                w = fan.size();
                break;
            }
        }
    }
    if (w == fan.size())
        throw Error(Errc::PreconditionViolated, "fan rotation found no end missing the path color");

    // Rotate the prefix: each edge takes the color of the next one.
    std::vector<Color> shifted(w);
    for (std::size_t i = 0; i < w; ++i)
        shifted[i] = c.color(edge_between(g, u, fan[i + 1]));
    for (std::size_t i = 0; i <= w; ++i) {
        const EdgeId f = edge_between(g, u, fan[i]);
        if (c.is_colored(f))
            c.unassign(f);
    }
    for (std::size_t i = 0; i < w; ++i)
        c.assign(edge_between(g, u, fan[i]), shifted[i]);
    c.assign(edge_between(g, u, fan[w]), b);
}

} // namespace

PartialColoring misra_gries_coloring(const MultiGraph& g)
{
    if (g.has_parallel_edges())
        throw Error(Errc::NotSimple, "Misra-Gries needs a simple graph");
    const int palette = std::max(1, g.max_degree() + 1);
    if (palette > kMaxPalette)
        throw Error(Errc::BadDimensions, "maximum degree too large for the color set");
    PartialColoring c(g, palette);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        color_edge(g, c, e);
    return c;
}

PartialColoring vizing_baseline(const MultiGraph& g, int k)
{
    if (k < 1 || k > kMaxPalette)
        throw Error(Errc::BadDimensions, "palette out of range");
    const PartialColoring full = misra_gries_coloring(g);
    const int palette = full.palette();
    std::vector<int> size(palette + 1, 0);
    for (Color col : full.colors())
        ++size[col];
    std::vector<Color> order(palette);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](Color x, Color y) { return size[x] > size[y]; });
    std::vector<Color> rename(palette + 1, kUncolored);
    for (int i = 0; i < std::min(k, palette); ++i)
        rename[order[i]] = i + 1;
    PartialColoring out(g, k);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (rename[full.color(e)] != kUncolored)
            out.assign(e, rename[full.color(e)]);
    return out;
}

} // namespace kecs
