#include "kecs/psi_engine.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <queue>

#include "kecs/decompose.hpp"
#include "kecs/error.hpp"
#include "kecs/patterns.hpp"

namespace kecs {

std::string Potential::str() const
{
    std::string out = "(" + std::to_string(colored);
    for (int n : by_size)
        out += "," + std::to_string(n);
    return out + ";" + std::to_string(cycles) + ";" + std::to_string(free_deficit) + ")";
}

namespace {

Potential potential_unchecked(const MultiGraph& g, const PartialColoring& c)
{
    const int half = g.max_degree() / 2;
    Potential p;
    p.colored = c.colored_count();
    p.by_size.assign(half, 0);
    p.free_deficit = g.max_degree() * g.num_vertices();
    const FreeComponentIndex idx = free_components(c);
    for (const FreeComponent& q : idx.components) {
        if (!q.nontrivial())
            continue;
        const int size = static_cast<int>(q.edges.size());
        if (size <= half)
            ++p.by_size[half - size];
        p.cycles += q.cycles;
        p.free_deficit -= q.free_union.size();
    }
    return p;
}

std::vector<EdgeId> changed_edges(const PartialColoring& a, const PartialColoring& b)
{
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < static_cast<EdgeId>(a.colors().size()); ++e)
        if (a.color(e) != b.color(e))
            out.push_back(e);
    return out;
}

struct FreePath {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
};

// Shortest path from v to w using uncolored edges only; empty when none.
FreePath free_path(const PartialColoring& c, VertexId v, VertexId w)
{
    const MultiGraph& g = c.graph();
    FreePath out;
    if (v == w) {
        out.vertices.push_back(v);
        return out;
    }
    std::vector<EdgeId> via(g.num_vertices(), kNoEdge);
    std::vector<bool> seen(g.num_vertices(), false);
    std::queue<VertexId> queue;
    queue.push(v);
    seen[v] = true;
    while (!queue.empty() && !seen[w]) {
        const VertexId at = queue.front();
        queue.pop();
        for (EdgeId e : g.incident(at)) {
            if (c.is_colored(e))
                continue;
            const VertexId next = g.other(e, at);
            if (seen[next])
                continue;
            seen[next] = true;
            via[next] = e;
            queue.push(next);
        }
    }
    if (!seen[w])
        return out;
    for (VertexId at = w; at != v; at = g.other(via[at], at)) {
        out.vertices.push_back(at);
        out.edges.push_back(via[at]);
    }
    out.vertices.push_back(v);
    std::reverse(out.vertices.begin(), out.vertices.end());
    std::reverse(out.edges.begin(), out.edges.end());
    return out;
}

// Gains one colored edge when v and w lie in one free component and share
// the free color a: walk a shortest free path from v toward w, shortening it
// by alternating-path swaps until the last edge can be colored.
bool color_via_shared(PartialColoring& c, VertexId v, VertexId w, Color a)
{
    const MultiGraph& g = c.graph();
    for (int guard = 0; guard <= g.num_vertices(); ++guard) {
        if (!c.free(v).contains(a) || !c.free(w).contains(a))
            return false;
        const FreePath p = free_path(c, v, w);
        if (p.edges.empty())
            return false;
        const EdgeId last = p.edges.back();
        if (p.edges.size() == 1) {
            c.assign(last, a);
            return true;
        }
        const VertexId x = p.vertices[p.vertices.size() - 2];
        if (c.free(x).contains(a)) {
            w = x;
            continue;
        }
        const ColorSet common = c.free(x) & c.free(w);
        if (!common.empty()) {
            c.assign(last, common.lowest());
            return true;
        }
        const Color b = c.free(x).lowest();
        if (b == kUncolored)
            return false;
        const VertexId end = swap_alternating_path(c, a, b, w);
        if (end != x) {
            if (!(c.free(x) & c.free(w)).contains(b))
                return false;
            c.assign(last, b);
            return true;
        }
        w = x;
    }
    return false;
}

// One colored edge more through any free component whose vertices share a
// free color, or whose alternating path between two members misses its
// target. Mutates c only on success.
bool gain_shared_free(PartialColoring& c)
{
    const FreeComponentIndex idx = free_components(c);
    for (const FreeComponent& q : idx.components) {
        if (!q.nontrivial())
            continue;
        for (std::size_t i = 0; i < q.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < q.vertices.size(); ++j) {
                const ColorSet common = c.free(q.vertices[i]) & c.free(q.vertices[j]);
                if (common.empty())
                    continue;
                PartialColoring trial = c;
                if (color_via_shared(trial, q.vertices[i], q.vertices[j], common.lowest())) {
                    c = std::move(trial);
                    return true;
                }
            }
    }
    for (const FreeComponent& q : idx.components) {
        if (!q.nontrivial())
            continue;
        for (VertexId v : q.vertices)
            for (VertexId w : q.vertices) {
                if (v == w)
                    continue;
                for (Color a : c.free(v).members())
                    for (Color b : c.free(w).members()) {
                        if (a == b || c.free(v).contains(b))
                            continue;
                        const AlternatingPath path = alternating_path(c, a, b, v);
                        if (path.end() == w)
                            continue;
                        PartialColoring trial = c;
                        swap_alternating_path(trial, a, b, v);
                        if (color_via_shared(trial, v, w, b)) {
                            c = std::move(trial);
                            return true;
                        }
                    }
            }
    }
    return false;
}

// Rotates the fan at the end whose free set meets the center's, then colors
// the freed edge. Mutates c only on success.
bool fan_direct(PartialColoring& c, VertexId x, EdgeId e)
{
    const Fan f = build_maximal_fan(c, x, e);
    for (int i = 0; i < f.size(); ++i) {
        if ((c.free(x) & c.free(f.ends[i])).empty())
            continue;
        PartialColoring trial = c;
        rotate_fan(trial, f, i);
        const ColorSet common = trial.free(x) & trial.free(f.ends[i]);
        if (common.empty())
            continue;
        trial.assign(f.edges[i], common.lowest());
        c = std::move(trial);
        return true;
    }
    return false;
}

// The uncolored edge a fan rotated at index i leaves behind is f.edges[i];
// after an alternating swap from that end, try to color it directly.
bool rotate_swap_color(PartialColoring& c, const Fan& f, int i)
{
    const MultiGraph& g = c.graph();
    PartialColoring base = c;
    rotate_fan(base, f, i);
    const EdgeId freed = f.edges[i];
    const VertexId x = f.center;
    const VertexId y = g.other(freed, x);
    for (Color a : base.free(x).members())
        for (Color b : base.free(y).members()) {
            if (a == b || base.free(y).contains(a) || base.free(x).contains(b))
                continue;
            for (VertexId start : {y, x}) {
                PartialColoring trial = base;
                swap_alternating_path(trial, a, b, start);
                const ColorSet common = trial.free(x) & trial.free(y);
                if (!common.empty()) {
                    trial.assign(freed, common.lowest());
                    c = std::move(trial);
                    return true;
                }
            }
        }
    return false;
}

// Every pair of colored edges that a single swap or rotation could help with
// is tried; the edge count of `e` is the only thing that must go up.
bool augment_edge(PartialColoring& c, EdgeId e)
{
    const MultiGraph& g = c.graph();
    const Endpoints ep = g.endpoints(e);
    const ColorSet direct = c.free(ep.u) & c.free(ep.v);
    if (!direct.empty()) {
        c.assign(e, direct.lowest());
        return true;
    }
    for (VertexId x : {ep.u, ep.v})
        if (fan_direct(c, x, e))
            return true;
    for (VertexId x : {ep.u, ep.v}) {
        const Fan f = build_maximal_fan(c, x, e);
        for (int i = 0; i < f.size(); ++i) {
            const VertexId yi = f.ends[i];
            for (Color a : c.free(x).members())
                for (Color b : c.free(yi).members()) {
                    if (a == b || c.free(x).contains(b) || c.free(yi).contains(a))
                        continue;
                    for (VertexId start : {yi, x}) {
                        PartialColoring trial = c;
                        swap_alternating_path(trial, a, b, start);
                        if (trial.is_colored(e))
                            continue;
                        const Endpoints te = g.endpoints(e);
                        const ColorSet common = trial.free(te.u) & trial.free(te.v);
                        if (!common.empty()) {
                            trial.assign(e, common.lowest());
                            c = std::move(trial);
                            return true;
                        }
                        if (fan_direct(trial, x, e)) {
                            c = std::move(trial);
                            return true;
                        }
                    }
                }
        }
        for (int i = 1; i < f.size(); ++i)
            if (rotate_swap_color(c, f, i))
                return true;
    }
    return false;
}

// Lemma-A style repair: edge e = xy is colored a, a is free somewhere in x's
// free component Q1, and Q1 shares a free color with y's component Q2.
// Recolors until a component holds a repeated free color, then cashes it in.
bool seeing_gain(PartialColoring& c, EdgeId e, VertexId x)
{
    const MultiGraph& g = c.graph();
    const VertexId y = g.other(e, x);
    const Color a = c.color(e);
    if (a == kUncolored)
        return false;
    FreeComponentIndex idx = free_components(c);
    const int q1 = idx.component_of_vertex[x];
    const int q2 = idx.component_of_vertex[y];
    if (q1 < 0 || q2 < 0 || q1 == q2)
        return false;
    const FreeComponent& Q1 = idx.components[q1];
    const FreeComponent& Q2 = idx.components[q2];
    if (!Q1.free_union.contains(a) || (Q1.free_union & Q2.free_union).empty())
        return false;

    if (Q2.free_union.contains(a)) {
        VertexId z = kNoVertex;
        for (VertexId w : Q2.vertices)
            if (c.free(w).contains(a)) {
                z = w;
                break;
            }
        // Neighbor of y inside Q2 closest to z.
        EdgeId yy = kNoEdge;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (EdgeId f : g.incident(y)) {
            if (c.is_colored(f))
                continue;
            const FreePath p = free_path(c, g.other(f, y), z);
            if (!p.vertices.empty() && p.edges.size() < best) {
                best = p.edges.size();
                yy = f;
            }
        }
        if (yy == kNoEdge)
            return false;
        const VertexId y1 = g.other(yy, y);
        for (int guard = 0; guard <= g.num_vertices(); ++guard) {
            if (z == y1) {
                c.unassign(e);
                if (!c.free(y1).contains(a) || !c.free(y).contains(a))
                    return false;
                c.assign(yy, a);
                return gain_shared_free(c);
            }
            const FreePath p = free_path(c, y1, z);
            if (p.edges.empty())
                return false;
            const VertexId z1 = p.vertices[p.vertices.size() - 2];
            const EdgeId zz = p.edges.back();
            if (c.free(z1).contains(a)) {
                z = z1;
                continue;
            }
            const Color cc = c.free(z1).lowest();
            if (cc == kUncolored || c.free(z).contains(cc))
                return gain_shared_free(c);
            const AlternatingPath r = alternating_path(c, a, cc, z);
            if (std::find(r.edges.begin(), r.edges.end(), e) == r.edges.end()) {
                swap_alternating_path(c, a, cc, z);
                if (r.end() != z1)
                    return gain_shared_free(c);
                z = z1;
                continue;
            }
            c.unassign(e);
            swap_alternating_path(c, a, cc, z);
            if (!(c.free(z) & c.free(z1)).contains(cc))
                return gain_shared_free(c);
            c.assign(zz, cc);
            return gain_shared_free(c);
        }
        return false;
    }

    const Color b = (Q1.free_union & Q2.free_union).lowest();
    auto owner = [&](const FreeComponent& q) {
        for (VertexId w : q.vertices)
            if (c.free(w).contains(b))
                return w;
        return kNoVertex;
    };
    const VertexId x1 = owner(Q1);
    const VertexId y1 = owner(Q2);
    if (x1 != x) {
        const Color cx = c.free(x).lowest();
        if (cx == kUncolored)
            return false;
        if (swap_alternating_path(c, b, cx, x1) != x)
            return gain_shared_free(c);
    }
    if (y1 != y) {
        const Color cy = c.free(y).lowest();
        if (cy == kUncolored)
            return false;
        if (swap_alternating_path(c, b, cy, y1) != y)
            return gain_shared_free(c);
    }
    if (!(c.free(x) & c.free(y)).contains(b) || c.color(e) != a)
        return false;
    c.unassign(e);
    c.assign(e, b);
    return gain_shared_free(c);
}

// Lemma-C style repair: e1 = xy and e2 = uv share a color, x and u lie in P,
// and P shares distinct free colors with y's and v's components.
bool twin_edge_gain(PartialColoring& c, EdgeId e1, VertexId x, EdgeId e2, VertexId u, Color a)
{
    const MultiGraph& g = c.graph();
    const VertexId y = g.other(e1, x);
    const Color shared = c.color(e1);
    FreeComponentIndex idx = free_components(c);
    const FreeComponent& P = idx.components[idx.component_of_vertex[x]];
    const FreeComponent& Q = idx.components[idx.component_of_vertex[y]];
    VertexId x1 = kNoVertex, y1 = kNoVertex;
    for (VertexId w : P.vertices)
        if (c.free(w).contains(a))
            x1 = w;
    for (VertexId w : Q.vertices)
        if (c.free(w).contains(a))
            y1 = w;
    if (x1 == kNoVertex || y1 == kNoVertex)
        return false;
    if (x1 != x) {
        const Color cx = c.free(x).lowest();
        if (cx == kUncolored || cx == shared)
            return false;
        if (swap_alternating_path(c, a, cx, x1) != x)
            return gain_shared_free(c);
    }
    if (y1 != y) {
        const Color cy = c.free(y).lowest();
        if (cy == kUncolored || cy == shared)
            return false;
        if (swap_alternating_path(c, a, cy, y1) != y)
            return gain_shared_free(c);
    }
    if (c.color(e1) != shared || c.color(e2) != shared || !(c.free(x) & c.free(y)).contains(a))
        return false;
    c.unassign(e1);
    c.assign(e1, a);
    return seeing_gain(c, e2, u) || gain_shared_free(c);
}

struct Candidate {
    PartialColoring coloring;
    Potential psi;
};

class Engine {
public:
    Engine(const MultiGraph& g, const PartialColoring& c) : g_(g), c_(c), before_(potential_unchecked(g, c)) {}

    std::optional<std::pair<Move, PartialColoring>> run()
    {
        if (auto r = try_augment())
            return r;
        {
            PartialColoring trial = c_;
            if (gain_shared_free(trial))
                return accept(MoveKind::SharedFreeColor, std::move(trial));
        }
        if (auto r = try_seeing(c_, MoveKind::SeeingComponents))
            return r;
        if (auto r = try_rotations())
            return r;
        if (auto r = try_full_components())
            return r;
        if (auto r = try_dense())
            return r;
        return std::nullopt;
    }

private:
    std::optional<std::pair<Move, PartialColoring>> accept(MoveKind kind, PartialColoring next)
    {
        Potential after = potential_unchecked(g_, next);
        if (!(after > before_))
            return std::nullopt;
        Move m;
        m.kind = kind;
        m.edges = changed_edges(c_, next);
        m.before = before_;
        m.after = std::move(after);
        return std::make_pair(std::move(m), std::move(next));
    }

    MoveKind rotation_kind(const Potential& after) const
    {
        if (after.by_size != before_.by_size)
            return MoveKind::FanMerge;
        if (after.cycles != before_.cycles)
            return MoveKind::CycleRotation;
        return MoveKind::FreeColorRepair;
    }

    std::optional<std::pair<Move, PartialColoring>> try_augment()
    {
        for (EdgeId e = 0; e < g_.num_edges(); ++e) {
            if (c_.is_colored(e))
                continue;
            PartialColoring trial = c_;
            if (augment_edge(trial, e))
                return accept(MoveKind::VizingAugment, std::move(trial));
        }
        return std::nullopt;
    }

    // Lemma A and Lemma C configurations in `base`; results are judged
    // against the potential of the engine's starting coloring.
    std::optional<std::pair<Move, PartialColoring>> try_seeing(const PartialColoring& base, MoveKind kind)
    {
        const FreeComponentIndex idx = free_components(base);
        const auto& comp = idx.component_of_vertex;
        for (EdgeId e = 0; e < g_.num_edges(); ++e) {
            if (!base.is_colored(e))
                continue;
            const Endpoints ep = g_.endpoints(e);
            for (VertexId x : {ep.u, ep.v}) {
                const VertexId y = ep.other(x);
                if (comp[x] < 0 || comp[y] < 0 || comp[x] == comp[y])
                    continue;
                const FreeComponent& q1 = idx.components[comp[x]];
                const FreeComponent& q2 = idx.components[comp[y]];
                if (!q1.free_union.contains(base.color(e)) || (q1.free_union & q2.free_union).empty())
                    continue;
                PartialColoring trial = base;
                if (seeing_gain(trial, e, x))
                    if (auto r = accept(kind, std::move(trial)))
                        return r;
            }
        }
        // Two same-colored edges leaving one component toward components
        // that share distinct free colors with it.
        for (VertexId x = 0; x < g_.num_vertices(); ++x) {
            if (comp[x] < 0)
                continue;
            const FreeComponent& p = idx.components[comp[x]];
            for (EdgeId e1 : g_.incident(x)) {
                const Color col = base.color(e1);
                const VertexId y = g_.other(e1, x);
                if (col == kUncolored || comp[y] < 0 || comp[y] == comp[x])
                    continue;
                const ColorSet with_q = p.free_union & idx.components[comp[y]].free_union;
                if (with_q.empty())
                    continue;
                for (VertexId u : p.vertices) {
                    if (u == x)
                        continue;
                    const EdgeId e2 = base.edge_with(u, col);
                    if (e2 == kNoEdge)
                        continue;
                    const VertexId v = g_.other(e2, u);
                    if (comp[v] < 0 || comp[v] == comp[x])
                        continue;
                    const ColorSet with_r = p.free_union & idx.components[comp[v]].free_union;
                    for (Color a : with_q.members()) {
                        if ((with_r - ColorSet::from_mask(1U << a)).empty())
                            continue;
                        PartialColoring trial = base;
                        if (twin_edge_gain(trial, e1, x, e2, u, a))
                            if (auto r = accept(kind, std::move(trial)))
                                return r;
                    }
                }
            }
        }
        return std::nullopt;
    }

    std::vector<Fan> all_fans(const PartialColoring& c) const
    {
        std::vector<Fan> fans;
        for (EdgeId e = 0; e < g_.num_edges(); ++e) {
            if (c.is_colored(e))
                continue;
            fans.push_back(build_maximal_fan(c, g_.endpoints(e).u, e));
            fans.push_back(build_maximal_fan(c, g_.endpoints(e).v, e));
        }
        return fans;
    }

    std::optional<std::pair<Move, PartialColoring>> try_rotations()
    {
        const std::vector<Fan> fans = all_fans(c_);
        for (const Fan& f : fans)
            for (int i = 1; i < f.size(); ++i) {
                PartialColoring trial = c_;
                rotate_fan(trial, f, i);
                const Potential after = potential_unchecked(g_, trial);
                if (after > before_)
                    return accept(rotation_kind(after), std::move(trial));
            }
        for (std::size_t s = 0; s < fans.size(); ++s)
            for (std::size_t t = 0; t < fans.size(); ++t) {
                if (s == t || fans[s].edges[0] == fans[t].edges[0])
                    continue;
                const Fan& f1 = fans[s];
                const Fan& f2 = fans[t];
                for (int i = 0; i < f1.size(); ++i)
                    for (int j = 0; j < f2.size(); ++j) {
                        if (f1.ends[i] != f2.ends[j] || (i == 0 && j == 0))
                            continue;
                        PartialColoring trial = c_;
                        rotate_fan(trial, f1, i);
                        if (!rotate_chain(trial, f2, j))
                            continue;
                        const Potential after = potential_unchecked(g_, trial);
                        if (after > before_)
                            return accept(rotation_kind(after), std::move(trial));
                    }
            }
        return std::nullopt;
    }

    // Rotates f at j after other mutations, if its pred chain is still a fan.
    static bool rotate_chain(PartialColoring& c, const Fan& f, int j)
    {
        std::vector<int> chain;
        for (int at = j; at != -1; at = f.pred[at])
            chain.push_back(at);
        std::reverse(chain.begin(), chain.end());
        Fan g;
        g.center = f.center;
        g.stamp = c.stamp();
        for (std::size_t k = 0; k < chain.size(); ++k) {
            g.edges.push_back(f.edges[chain[k]]);
            g.ends.push_back(f.ends[chain[k]]);
            g.pred.push_back(static_cast<int>(k) - 1);
            g.full.push_back(c.free(f.ends[chain[k]]).empty());
        }
        if (!fan_is_valid(c, g))
            return false;
        rotate_fan(c, g, g.size() - 1);
        return true;
    }

    struct Anchor {
        VertexId vertex;
        int component;
        // Rotating `fan` at `index` brings the vertex into the component.
        std::optional<Fan> fan;
        int index = 0;
    };

    std::optional<std::pair<Move, PartialColoring>> try_full_components()
    {
        const FreeComponentIndex idx = free_components(c_);
        const int delta = g_.max_degree();
        std::vector<Anchor> anchors;
        std::vector<int> anchor_of(g_.num_vertices(), -1);
        for (int q = 0; q < static_cast<int>(idx.components.size()); ++q)
            for (VertexId v : idx.components[q].vertices) {
                anchor_of[v] = static_cast<int>(anchors.size());
                anchors.push_back({v, q, std::nullopt, 0});
            }
        for (const Fan& f : all_fans(c_)) {
            if (!is_stable_fan(c_, f))
                continue;
            const int q = idx.component_of_edge[f.edges[0]];
            for (int i = 1; i < f.size(); ++i) {
                if (!f.full[i] || anchor_of[f.ends[i]] != -1)
                    continue;
                anchor_of[f.ends[i]] = static_cast<int>(anchors.size());
                anchors.push_back({f.ends[i], q, f, i});
            }
        }
        for (EdgeId e = 0; e < g_.num_edges(); ++e) {
            if (!c_.is_colored(e))
                continue;
            const Endpoints ep = g_.endpoints(e);
            const int au = anchor_of[ep.u];
            const int av = anchor_of[ep.v];
            if (au < 0 || av < 0 || anchors[au].component == anchors[av].component)
                continue;
            const int qu = anchors[au].component;
            const int qv = anchors[av].component;
            const bool full_u = idx.components[qu].nontrivial() && idx.components[qu].free_union.size() >= delta - 1;
            const bool full_v = idx.components[qv].nontrivial() && idx.components[qv].free_union.size() >= delta - 1;
            if (!full_u && !full_v)
                continue;
            if (!anchors[au].fan && !anchors[av].fan)
                continue; // plain seeing configuration, already covered
            PartialColoring trial = c_;
            bool ok = true;
            for (int a : {av, au})
                if (anchors[a].fan)
                    ok = ok && rotate_chain(trial, *anchors[a].fan, anchors[a].index);
            if (!ok)
                continue;
            if (auto r = accept(MoveKind::FullComponentRepair, trial))
                return r;
            if (auto r = try_seeing(trial, MoveKind::FullComponentRepair))
                return r;
            PartialColoring gain = trial;
            if (gain_shared_free(gain))
                if (auto r = accept(MoveKind::FullComponentRepair, std::move(gain)))
                    return r;
        }
        return std::nullopt;
    }

    // Exact recoloring of the edges inside N[S] for a dense vertex set S,
    // all other colors held fixed.
    std::optional<std::pair<Move, PartialColoring>> try_dense()
    {
        if (!g_.simple() || g_.max_degree() < 2 || c_.uncolored_count() == 0)
            return std::nullopt;
        const int delta = g_.max_degree();
        for (const auto& s : dense_sets()) {
            std::vector<bool> in_closed(g_.num_vertices(), false);
            for (VertexId v : s) {
                in_closed[v] = true;
                for (EdgeId e : g_.incident(v))
                    in_closed[g_.other(e, v)] = true;
            }
            std::vector<EdgeId> region;
            for (EdgeId e = 0; e < g_.num_edges(); ++e)
                if (in_closed[g_.endpoints(e).u] && in_closed[g_.endpoints(e).v])
                    region.push_back(e);
            int uncolored = 0;
            for (EdgeId e : region)
                uncolored += c_.is_colored(e) ? 0 : 1;
            if (uncolored == 0)
                continue;
            PartialColoring trial = c_;
            if (recolor_region(trial, region, delta))
                if (auto r = accept(MoveKind::DenseRepair, std::move(trial)))
                    return r;
        }
        return std::nullopt;
    }

    std::vector<std::vector<VertexId>> dense_sets() const
    {
        const int delta = g_.max_degree();
        const int n = g_.num_vertices();
        std::vector<std::vector<VertexId>> out;
        std::vector<bool> mark(n, false);
        auto induced = [&](const std::vector<VertexId>& s) {
            for (VertexId v : s)
                mark[v] = true;
            int count = 0;
            for (VertexId v : s)
                for (EdgeId e : g_.incident(v))
                    if (mark[g_.other(e, v)])
                        ++count;
            for (VertexId v : s)
                mark[v] = false;
            return count / 2;
        };
        const int full = (delta + 1) * delta / 2;
        for (VertexId v = 0; v < n; ++v) {
            if (g_.degree(v) != delta)
                continue;
            std::vector<VertexId> s{v};
            for (EdgeId e : g_.incident(v))
                s.push_back(g_.other(e, v));
            std::sort(s.begin(), s.end());
            if (induced(s) >= full - 1 && s.front() == v)
                out.push_back(s);
            if (delta != 6)
                continue;
            for (EdgeId drop : g_.incident(v)) {
                std::vector<VertexId> t{v};
                for (EdgeId e : g_.incident(v))
                    if (e != drop)
                        t.push_back(g_.other(e, v));
                std::sort(t.begin(), t.end());
                if (t.front() != v || induced(t) != 15)
                    continue;
                int leaving = 0;
                for (VertexId w : t)
                    leaving += g_.degree(w) - 5;
                if (leaving == 6)
                    out.push_back(t);
            }
        }
        return out;
    }

    static bool recolor_region(PartialColoring& c, const std::vector<EdgeId>& region, int k)
    {
        const MultiGraph& g = c.graph();
        int current = 0;
        for (EdgeId e : region) {
            current += c.is_colored(e) ? 1 : 0;
            c.unassign(e);
        }
        std::vector<Color> assignment(region.size(), kUncolored);
        std::vector<Color> best_assignment;
        int best = current;
        std::int64_t nodes = 0;
        constexpr std::int64_t kNodeLimit = 200000;
        auto dfs = [&](auto&& self, std::size_t pos, int colored) -> void {
            if (++nodes > kNodeLimit || best == static_cast<int>(region.size()))
                return;
            if (colored + static_cast<int>(region.size() - pos) <= best)
                return;
            if (pos == region.size()) {
                best = colored;
                best_assignment = assignment;
                return;
            }
            const EdgeId e = region[pos];
            const Endpoints ep = g.endpoints(e);
            const ColorSet avail = c.free(ep.u) & c.free(ep.v);
            for (Color col : avail.members()) {
                c.assign(e, col);
                assignment[pos] = col;
                self(self, pos + 1, colored + 1);
                c.unassign(e);
                assignment[pos] = kUncolored;
            }
            self(self, pos + 1, colored);
        };
        dfs(dfs, 0, 0);
        (void)k;
        if (best_assignment.empty())
            return false;
        for (std::size_t i = 0; i < region.size(); ++i)
            if (best_assignment[i] != kUncolored)
                c.assign(region[i], best_assignment[i]);
        return true;
    }

    const MultiGraph& g_;
    const PartialColoring& c_;
    Potential before_;
};

} // namespace

Potential potential(const MultiGraph& g, const PartialColoring& c)
{
    if (c.palette() != g.max_degree())
        throw Error(Errc::PaletteMismatch, "palette " + std::to_string(c.palette()) + " but maximum degree " +
                                               std::to_string(g.max_degree()));
    return potential_unchecked(g, c);
}

std::string_view move_name(MoveKind kind)
{
    switch (kind) {
    case MoveKind::VizingAugment: return "M0-vizing-augment";
    case MoveKind::SharedFreeColor: return "M1-shared-free-color";
    case MoveKind::SeeingComponents: return "M2-seeing-components";
    case MoveKind::FanMerge: return "M3-fan-merge";
    case MoveKind::CycleRotation: return "M4-cycle-rotation";
    case MoveKind::FreeColorRepair: return "M5-free-color-repair";
    case MoveKind::FullComponentRepair: return "M6-full-component-repair";
    case MoveKind::DenseRepair: return "M7-dense-repair";
    }
    return "unknown";
}

std::optional<PartialColoring> vizing_augment(const MultiGraph& g, const PartialColoring& c, EdgeId e)
{
    if (e < 0 || e >= g.num_edges())
        throw Error(Errc::IndexOutOfRange, "edge " + std::to_string(e));
    if (c.is_colored(e))
        throw Error(Errc::EdgeNotUncolored, "edge " + std::to_string(e) + " is colored");
    PartialColoring trial = c;
    if (augment_edge(trial, e))
        return trial;
    return std::nullopt;
}

std::optional<std::pair<Move, PartialColoring>> improve_once(const MultiGraph& g, const PartialColoring& c)
{
    return Engine(g, c).run();
}

std::int64_t default_iteration_cap(const MultiGraph& g)
{
    constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
    const std::int64_t base = static_cast<std::int64_t>(g.num_edges()) + g.num_vertices();
    std::int64_t cap = 10 * static_cast<std::int64_t>(std::max(1, g.num_edges()));
    for (int i = 0; i < g.max_degree() / 2; ++i) {
        if (base != 0 && cap > kMax / base)
            return kMax;
        cap *= std::max<std::int64_t>(1, base);
    }
    return cap;
}

PsiResult maximize_psi_from(const MultiGraph& g, const PartialColoring& start, const PsiOptions& options)
{
    if (start.palette() != std::max(1, g.max_degree()))
        throw Error(Errc::PaletteMismatch, "palette " + std::to_string(start.palette()) + " but maximum degree " +
                                               std::to_string(g.max_degree()));
    PsiResult result{start, {}, 0};
    if (g.num_edges() == 0)
        return result;
    const std::int64_t cap = options.iteration_cap > 0 ? options.iteration_cap : default_iteration_cap(g);
    while (auto step = improve_once(g, result.coloring)) {
        if (++result.iterations > cap)
            throw Error(Errc::IterationCapExceeded, "more than " + std::to_string(cap) + " improving moves");
        result.coloring = std::move(step->second);
        const Move& m = step->first;
        if (options.verbose && options.trace_stream)
            *options.trace_stream << move_name(m.kind) << ' ' << m.before.str() << " -> " << m.after.str() << '\n';
        if (options.observer)
            options.observer(m);
        if (options.keep_trace)
            result.trace.push_back(std::move(step->first));
    }
    return result;
}

PsiResult maximize_psi_run(const MultiGraph& g, const PsiOptions& options)
{
    return maximize_psi_from(g, PartialColoring(g, std::max(1, g.max_degree())), options);
}

PartialColoring maximize_psi(const MultiGraph& g)
{
    PsiOptions options;
    options.keep_trace = false;
    return maximize_psi_run(g, options).coloring;
}

Rational guaranteed_fraction(int delta, bool exception)
{
    if (delta < 3 || delta > 7)
        throw Error(Errc::UnsupportedDelta, "no guarantee for maximum degree " + std::to_string(delta));
    if (exception && (delta == 3 || delta == 4 || delta == 6))
        return Rational(delta, delta + 1);
    switch (delta) {
    case 3: return Rational(13, 15);
    case 4: return Rational(5, 6);
    case 5: return Rational(23, 27);
    case 6: return Rational(19, 22);
    default: return Rational(22, 25);
    }
}

bool is_guarantee_exception(const MultiGraph& g)
{
    switch (g.max_degree()) {
    case 3:
        return match_small_pattern(g, "G3") || match_small_pattern(g, "B3") || match_small_pattern(g, "Gstar5");
    case 4: return match_small_pattern(g, "K5");
    case 6: return match_small_pattern(g, "K7");
    default: return false;
    }
}

std::vector<Color> clique_color(int n, int k)
{
    if (k < 1 || n != k + 1 || k > kMaxPalette)
        throw Error(Errc::BadDimensions, "clique_color needs n = k + 1 with 1 <= k <= " + std::to_string(kMaxPalette));
    // Round-robin factorization of K_{m} (m even) with m - 1 colors: the
    // last vertex is the hub, the others sit on a circle mod m - 1.
    auto factor_color = [](int m, int u, int v) -> Color {
        const int r = m - 1;
        if (v == m - 1)
            return u + 1;
        if (u == m - 1)
            return v + 1;
        const int half = (r + 1) / 2; // inverse of 2 mod odd r
        return static_cast<Color>((static_cast<long long>(u + v) * half) % r) + 1;
    };
    std::vector<Color> out;
    out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (k % 2 == 1) {
                out.push_back(factor_color(k + 1, u, v));
            } else {
                // K_{k+2} with k+1 colors, vertex k+1 deleted, color k+1 dropped.
                const Color col = factor_color(k + 2, u, v);
                out.push_back(col == k + 1 ? kUncolored : col);
            }
        }
    return out;
}

} // namespace kecs
