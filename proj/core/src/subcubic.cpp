#include "kecs/subcubic.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "kecs/decompose.hpp"
#include "kecs/error.hpp"
#include "kecs/oracle.hpp"
#include "kecs/patterns.hpp"
#include "kecs/psi_engine.hpp"
#include "kecs/rational.hpp"

namespace kecs {

namespace {

constexpr int kPalette = 3;
constexpr int kExactFallbackEdges = 24;

void require_subcubic(const MultiGraph& g)
{
    if (g.max_degree() > 3)
        throw Error(Errc::DegreeTooHigh, "maximum degree " + std::to_string(g.max_degree()) + " exceeds 3");
}

std::vector<Color> exact_colors(const MultiGraph& g, SubcubicStats* stats)
{
    if (stats)
        ++stats->exact_solves;
    return exact_max_ecs(g, kPalette).witness;
}

bool has_bridge(const MultiGraph& g) { return !decompose(g).bridges.empty(); }

std::vector<Color> component_colors(const MultiGraph& g, SubcubicStats* stats);

// Colors of the augmenting loop used when the maximum degree is below 3,
// where the potential's palette would not be 3.
std::vector<Color> augment_all(const MultiGraph& g)
{
    PartialColoring c(g, kPalette);
    bool progress = true;
    while (progress) {
        progress = false;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            if (c.is_colored(e))
                continue;
            if (auto next = vizing_augment(g, c, e)) {
                c = std::move(*next);
                progress = true;
            }
        }
    }
    return c.colors();
}

int count_colored(const std::vector<Color>& colors)
{
    return static_cast<int>(std::count_if(colors.begin(), colors.end(), [](Color c) { return c != kUncolored; }));
}

std::vector<Color> core_colors(const MultiGraph& g, SubcubicStats* stats)
{
    std::vector<Color> colors = g.max_degree() < kPalette ? augment_all(g) : maximize_psi(g).colors();
    const int floor = Rational(13, 15).ceil_times(g.num_edges());
    if (count_colored(colors) >= floor)
        return colors;
    if (g.num_edges() <= kExactFallbackEdges) {
        if (stats)
            ++stats->oracle_fallbacks;
        return exact_colors(g, stats);
    }
    throw Error(Errc::FractionNotReached, std::to_string(count_colored(colors)) + " of " +
                                              std::to_string(g.num_edges()) + " colored, below 13/15");
}

// Colors of the three triangle edges given the colors already at the
// triangle's vertices. Always possible: each corner carries at most one
// outside color and those are pairwise distinct.
void color_triangle(const MultiGraph& g, std::vector<Color>& colors, const std::array<VertexId, 3>& t)
{
    std::array<EdgeId, 3> side{}; // side[i] is opposite t[i]
    for (int i = 0; i < 3; ++i)
        side[i] = g.find_edge(t[(i + 1) % 3], t[(i + 2) % 3]);
    std::array<ColorSet, 3> used{};
    for (int i = 0; i < 3; ++i)
        for (EdgeId e : g.incident(t[i]))
            if (colors[e] != kUncolored)
                used[i].insert(colors[e]);
    for (Color a = 1; a <= kPalette; ++a)
        for (Color b = 1; b <= kPalette; ++b)
            for (Color c = 1; c <= kPalette; ++c) {
                const std::array<Color, 3> pick{a, b, c};
                if (a == b || b == c || a == c)
                    continue;
                bool ok = true;
                // side[i] touches t[i+1] and t[i+2]
                for (int i = 0; i < 3 && ok; ++i)
                    ok = !used[(i + 1) % 3].contains(pick[i]) && !used[(i + 2) % 3].contains(pick[i]);
                if (!ok)
                    continue;
                for (int i = 0; i < 3; ++i)
                    colors[side[i]] = pick[i];
                return;
            }
    throw Error(Errc::PreconditionViolated, "triangle could not be colored on top of the contracted coloring");
}

bool find_plain_triangle(const MultiGraph& g, std::array<VertexId, 3>& out)
{
    const int n = g.num_vertices();
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) {
            if (g.multiplicity(a, b) != 1)
                continue;
            for (VertexId c = b + 1; c < n; ++c)
                if (g.multiplicity(a, c) == 1 && g.multiplicity(b, c) == 1) {
                    out = {a, b, c};
                    return true;
                }
        }
    return false;
}

bool is_named_exception(const MultiGraph& g)
{
    return match_small_pattern(g, "G3") || match_small_pattern(g, "B3") || match_small_pattern(g, "Gstar5");
}

std::vector<Color> biconnected_colors(const MultiGraph& g, SubcubicStats* stats)
{
    if (g.num_vertices() <= 4)
        return exact_colors(g, stats);
    std::array<VertexId, 3> t{};
    if (!find_triangle(g, t))
        return core_colors(g, stats);
    if (!find_plain_triangle(g, t))
        throw Error(Errc::PreconditionViolated, "every triangle has a doubled side");
    if (stats)
        ++stats->contractions;
    const Contraction con = contract_triangle(g, t);
    if (is_named_exception(con.graph))
        return exact_colors(g, stats);
    const std::vector<Color> inner = biconnected_colors(con.graph, stats);
    std::vector<Color> colors(g.num_edges(), kUncolored);
    for (EdgeId e = 0; e < con.graph.num_edges(); ++e)
        colors[con.edge_origin[e]] = inner[e];
    color_triangle(g, colors, t);
    return colors;
}

std::vector<Color> component_colors(const MultiGraph& g, SubcubicStats* stats)
{
    if (g.num_edges() == 0)
        return {};
    if (is_named_exception(g))
        return exact_colors(g, stats);
    const Decomposition d = decompose(g);
    if (d.bridges.empty())
        return biconnected_colors(g, stats);

    if (stats)
        ++stats->bridge_splits;
    const EdgeId bridge = d.bridges.front();
    std::vector<bool> keep(g.num_edges(), true);
    keep[bridge] = false;
    const auto [rest, rest_origin] = edge_subgraph(g, keep);
    const Decomposition parts = decompose(rest);
    const VertexId p = g.endpoints(bridge).u;
    const VertexId q = g.endpoints(bridge).v;
    std::vector<Color> colors(g.num_edges(), kUncolored);
    ColorSet free_p = ColorSet::palette(kPalette), free_q = ColorSet::palette(kPalette);
    std::vector<Color> side_q_colors;
    std::vector<EdgeId> side_q_edges;
    for (VertexId root : {p, q}) {
        std::vector<EdgeId> edges;
        for (EdgeId e = 0; e < rest.num_edges(); ++e)
            if (parts.component_of[rest.endpoints(e).u] == parts.component_of[root])
                edges.push_back(e);
        if (edges.empty())
            continue;
        const Subgraph side = induced_by_edges(rest, edges);
        const std::vector<Color> inner = component_colors(side.graph, stats);
        for (EdgeId e = 0; e < side.graph.num_edges(); ++e) {
            const EdgeId orig = rest_origin[side.edge_origin[e]];
            if (root == p) {
                colors[orig] = inner[e];
                if (inner[e] != kUncolored && g.endpoints(orig).has(p))
                    free_p.erase(inner[e]);
            } else {
                side_q_edges.push_back(orig);
                side_q_colors.push_back(inner[e]);
                if (inner[e] != kUncolored && g.endpoints(orig).has(q))
                    free_q.erase(inner[e]);
            }
        }
    }
    // Rename q's side so one of its free colors at q matches one at p.
    const Color alpha = free_p.lowest();
    const Color beta = free_q.lowest();
    for (std::size_t i = 0; i < side_q_edges.size(); ++i) {
        Color c = side_q_colors[i];
        if (c == alpha)
            c = beta;
        else if (c == beta)
            c = alpha;
        colors[side_q_edges[i]] = c;
    }
    colors[bridge] = alpha;
    return colors;
}

} // namespace

std::string_view case_name(SubcubicCase c)
{
    switch (c) {
    case SubcubicCase::G3: return "G3";
    case SubcubicCase::B3: return "B3";
    case SubcubicCase::Gstar5: return "Gstar5";
    case SubcubicCase::Small: return "small";
    case SubcubicCase::TriangleFreeCore: return "triangle-free";
    case SubcubicCase::HasTriangle: return "has-triangle";
    }
    return "unknown";
}

SubcubicCase classify_subcubic(const MultiGraph& g)
{
    require_subcubic(g);
    if (match_small_pattern(g, "G3"))
        return SubcubicCase::G3;
    if (match_small_pattern(g, "B3"))
        return SubcubicCase::B3;
    if (match_small_pattern(g, "Gstar5"))
        return SubcubicCase::Gstar5;
    if (g.num_vertices() <= 4)
        return SubcubicCase::Small;
    std::array<VertexId, 3> t{};
    return find_triangle(g, t) ? SubcubicCase::HasTriangle : SubcubicCase::TriangleFreeCore;
}

PartialColoring solve_subcubic(const MultiGraph& g, SubcubicStats* stats)
{
    require_subcubic(g);
    std::vector<Color> colors(g.num_edges(), kUncolored);
    const Decomposition d = decompose(g);
    std::vector<std::vector<EdgeId>> by_component(d.num_components);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        by_component[d.component_of[g.endpoints(e).u]].push_back(e);
    for (const auto& edges : by_component) {
        if (edges.empty())
            continue;
        const Subgraph part = induced_by_edges(g, edges);
        const std::vector<Color> inner = component_colors(part.graph, stats);
        for (EdgeId e = 0; e < part.graph.num_edges(); ++e)
            colors[part.edge_origin[e]] = inner[e];
    }
    return PartialColoring::from_colors(g, kPalette, colors);
}

PartialColoring solve_biconnected(const MultiGraph& g, SubcubicStats* stats)
{
    require_subcubic(g);
    if (g.num_edges() == 0 || decompose(g).num_components != 1 || has_bridge(g))
        throw Error(Errc::PreconditionViolated, "graph must be connected and bridgeless");
    if (is_named_exception(g))
        throw Error(Errc::PreconditionViolated, "G3, B3 and Gstar5 are excluded");
    return PartialColoring::from_colors(g, kPalette, biconnected_colors(g, stats));
}

PartialColoring triangle_free_core(const MultiGraph& g, SubcubicStats* stats)
{
    require_subcubic(g);
    std::array<VertexId, 3> t{};
    if (find_triangle(g, t))
        throw Error(Errc::PreconditionViolated, "graph has a triangle");
    if (g.num_edges() == 0)
        return PartialColoring(g, kPalette);
    return PartialColoring::from_colors(g, kPalette, core_colors(g, stats));
}

bool contains_g3(const MultiGraph& g)
{
    for (const Endpoints& e : g.edges()) {
        if (g.multiplicity(e.u, e.v) < 2)
            continue;
        for (EdgeId f : g.incident(e.u)) {
            const VertexId w = g.other(f, e.u);
            if (w != e.v && g.multiplicity(e.v, w) > 0)
                return true;
        }
    }
    return false;
}

int subcubic_promise(const MultiGraph& g)
{
    require_subcubic(g);
    const MultiGraph doubled_c5 =
        build_graph(5, {{0, 2}, {0, 2}, {2, 4}, {1, 4}, {1, 3}, {1, 3}, {0, 3}}, false);
    const Decomposition d = decompose(g);
    std::vector<std::vector<EdgeId>> by_component(d.num_components);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        by_component[d.component_of[g.endpoints(e).u]].push_back(e);
    int total = 0;
    for (const auto& edges : by_component) {
        if (edges.empty())
            continue;
        const MultiGraph part = induced_by_edges(g, edges).graph;
        const int m = part.num_edges();
        if (match_small_pattern(part, "G3"))
            total += 3;
        else if (match_small_pattern(part, "B3") || match_small_pattern(part, "Gstar5") || isomorphic(part, doubled_c5))
            total += 6;
        else if (contains_g3(part))
            total += Rational(7, 9).ceil_times(m);
        else
            total += Rational(13, 15).ceil_times(m);
    }
    return total;
}

} // namespace kecs
