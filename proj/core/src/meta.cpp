#include "kecs/meta.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "kecs/decompose.hpp"
#include "kecs/error.hpp"
#include "kecs/factor.hpp"
#include "kecs/oracle.hpp"
#include "kecs/patterns.hpp"
#include "kecs/psi_engine.hpp"
#include "kecs/subcubic.hpp"
#include "kecs/vizing.hpp"

namespace kecs {

namespace {

int count_colored(const std::vector<Color>& colors)
{
    return static_cast<int>(std::count_if(colors.begin(), colors.end(), [](Color c) { return c != kUncolored; }));
}

FamilyMember make_member(int k, const std::string& name)
{
    FamilyMember m;
    m.name = name;
    m.graph = pattern_graph(name);
    const MultiGraph& a = m.graph;
    auto fail = [&](const std::string& why) { throw Error(Errc::NotKNormal, name + ": " + why); };

    int low = 0;
    for (VertexId v = 0; v < a.num_vertices(); ++v)
        low += a.degree(v) < k ? 1 : 0;
    if (a.max_degree() != k || low > 1)
        fail("needs maximum degree k with at most one vertex of smaller degree");
    m.regular = low == 0;

    const OracleResult best = exact_max_ecs(a, k);
    m.optimum = best.optimum;
    m.witness = best.witness;
    if (m.optimum != k * (a.num_vertices() / 2))
        fail("c_k is below the matching bound, so maximality over graphs of the same order is not certified");

    const Decomposition d = decompose(a);
    if (d.num_components != 1 || !d.bridges.empty())
        fail("not 2-edge-connected");

    for (EdgeId e = 0; e < a.num_edges(); ++e) {
        std::vector<bool> keep(a.num_edges(), true);
        keep[e] = false;
        const auto [rest, origin] = edge_subgraph(a, keep);
        const OracleResult r = exact_max_ecs(rest, k);
        if (r.optimum != m.optimum)
            fail("removing an edge lowers c_k");
        std::vector<Color> colors(a.num_edges(), kUncolored);
        for (EdgeId i = 0; i < rest.num_edges(); ++i)
            colors[origin[i]] = r.witness[i];
        m.optimum_without.push_back(r.optimum);
        m.witness_without.push_back(std::move(colors));
    }
    return m;
}

} // namespace

ExceptionFamily make_family(int k, const std::vector<std::string>& patterns)
{
    ExceptionFamily fam;
    fam.k = k;
    for (const std::string& p : patterns)
        fam.members.push_back(make_member(k, p));
    return fam;
}

ExceptionFamily named_family(std::string_view name)
{
    if (name == "G3" || name == "B3")
        return make_family(3, {std::string(name)});
    if (name == "K5")
        return make_family(4, {"K5"});
    if (name == "K7")
        return make_family(6, {"K7"});
    throw Error(Errc::UnknownPattern, "no family named " + std::string(name));
}

FamilyConstants family_constants(const ExceptionFamily& fam)
{
    if (fam.members.empty())
        throw Error(Errc::NotKNormal, "empty family");
    FamilyConstants out{Rational::infinity(), Rational::infinity()};
    for (const FamilyMember& a : fam.members) {
        out.gamma = min(out.gamma, Rational(a.optimum + 1, a.graph.num_edges() + 1));
        if (a.regular)
            continue;
        for (const FamilyMember& b : fam.members)
            out.beta = min(out.beta, Rational(a.optimum + b.optimum + 1,
                                              a.graph.num_edges() + b.graph.num_edges() + 1));
    }
    return out;
}

Rational core_ratio(int k, bool simple)
{
    if (k == 3)
        return simple ? Rational(13, 15) : Rational(7, 9);
    if (k < 3 || k > 7)
        throw Error(Errc::UnsupportedDelta, "core solver covers k = 3..7");
    return guaranteed_fraction(k, false);
}

std::vector<Color> core_color(const MultiGraph& h, int k)
{
    if (k == 3)
        return solve_subcubic(h).colors();
    if (h.max_degree() > k)
        throw Error(Errc::DegreeTooHigh, "core input must be a k-matching");
    if (h.max_degree() < k)
        return misra_gries_coloring(h).colors();
    return maximize_psi(h).colors();
}

std::optional<int> match_family(const ExceptionFamily& fam, const MultiGraph& h)
{
    for (int i = 0; i < static_cast<int>(fam.members.size()); ++i)
        if (isomorphic(fam.members[i].graph, h))
            return i;
    return std::nullopt;
}

namespace {

// Connected components of the edge set `in` (a mask over g's edges).
struct EdgeComponents {
    std::vector<int> of_vertex; // -1 when no edge of `in` touches it
    std::vector<std::vector<VertexId>> vertices;
    std::vector<std::vector<EdgeId>> edges;
};

EdgeComponents edge_components(const MultiGraph& g, const std::vector<bool>& in)
{
    EdgeComponents out;
    out.of_vertex.assign(g.num_vertices(), -1);
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        if (out.of_vertex[s] != -1)
            continue;
        bool touched = false;
        for (EdgeId e : g.incident(s))
            touched = touched || in[e];
        if (!touched)
            continue;
        const int id = static_cast<int>(out.vertices.size());
        out.vertices.emplace_back();
        out.edges.emplace_back();
        std::vector<VertexId> stack{s};
        out.of_vertex[s] = id;
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            out.vertices[id].push_back(v);
            for (EdgeId e : g.incident(v)) {
                if (!in[e])
                    continue;
                const VertexId w = g.other(e, v);
                if (out.of_vertex[w] == -1) {
                    out.of_vertex[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.vertices[id].begin(), out.vertices[id].end());
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (in[e])
            out.edges[out.of_vertex[g.endpoints(e).u]].push_back(e);
    return out;
}

std::vector<bool> mask_of(const MultiGraph& g, const std::vector<EdgeId>& edges)
{
    std::vector<bool> in(g.num_edges(), false);
    for (EdgeId e : edges)
        in[e] = true;
    return in;
}

std::vector<EdgeId> list_of(const std::vector<bool>& in)
{
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < static_cast<EdgeId>(in.size()); ++e)
        if (in[e])
            out.push_back(e);
    return out;
}

std::optional<int> member_of_edges(const MultiGraph& g, const ExceptionFamily& fam, const std::vector<EdgeId>& edges)
{
    const Subgraph s = induced_by_edges(g, edges);
    return match_family(fam, s.graph);
}

std::vector<GammaEntry> detect(const MultiGraph& g, const std::vector<bool>& in_f, const ExceptionFamily& fam)
{
    const EdgeComponents comps = edge_components(g, in_f);
    std::vector<GammaEntry> out;
    for (std::size_t c = 0; c < comps.vertices.size(); ++c)
        if (auto m = member_of_edges(g, fam, comps.edges[c]))
            out.push_back({comps.vertices[c], comps.edges[c], *m});
    return out;
}

} // namespace

std::vector<GammaEntry> detect_exceptions(const MultiGraph& g, const std::vector<EdgeId>& f,
                                          const ExceptionFamily& fam)
{
    return detect(g, mask_of(g, f), fam);
}

int normalize_F(const MultiGraph& g, std::vector<EdgeId>& f, const ExceptionFamily& fam)
{
    std::vector<bool> in_f = mask_of(g, f);
    int swaps = 0;
    for (bool again = true; again;) {
        again = false;
        std::vector<int> deg(g.num_vertices(), 0);
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            if (in_f[e]) {
                ++deg[g.endpoints(e).u];
                ++deg[g.endpoints(e).v];
            }
        for (const GammaEntry& q : detect(g, in_f, fam)) {
            std::vector<bool> inside(g.num_vertices(), false);
            for (VertexId v : q.vertices)
                inside[v] = true;
            for (VertexId x : q.vertices) {
                for (EdgeId xy : g.incident(x)) {
                    const VertexId y = g.other(xy, x);
                    if (inside[y] || deg[y] >= fam.k)
                        continue;
                    for (EdgeId old : g.incident(x))
                        if (in_f[old] && inside[g.other(old, x)]) {
                            in_f[old] = false;
                            break;
                        }
                    in_f[xy] = true;
                    ++swaps;
                    again = true;
                    break;
                }
                if (again)
                    break;
            }
            if (again)
                break;
        }
    }
    f = list_of(in_f);
    return swaps;
}

bool StarForest::is_star_forest() const
{
    // A forest has |links| = components - trees; a star has no link between
    // two vertices of degree >= 2.
    std::vector<int> parent(components);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : links) {
        const int ra = find(a);
        const int rb = find(b);
        if (ra == rb)
            return false;
        parent[ra] = rb;
        if (degree[a] >= 2 && degree[b] >= 2)
            return false;
    }
    return true;
}

StarForest star_forest(const MultiGraph& g, const std::vector<bool>& in_f, const std::vector<bool>& in_r)
{
    const EdgeComponents comps = edge_components(g, in_f);
    StarForest out;
    out.component_of_vertex = comps.of_vertex;
    out.components = static_cast<int>(comps.vertices.size());
    std::set<std::pair<int, int>> links;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!in_r[e])
            continue;
        const int a = comps.of_vertex[g.endpoints(e).u];
        const int b = comps.of_vertex[g.endpoints(e).v];
        if (a == -1 || b == -1)
            throw Error(Errc::InvariantViolated, "an R edge touches a vertex outside F");
        if (a != b)
            links.insert({std::min(a, b), std::max(a, b)});
    }
    out.links.assign(links.begin(), links.end());
    out.degree.assign(out.components, 0);
    for (auto [a, b] : out.links) {
        ++out.degree[a];
        ++out.degree[b];
    }
    return out;
}

namespace {

// Exact coloring of a family component through the stored tables, with
// `without` (an edge of g inside the component) optionally left out.
std::vector<std::pair<EdgeId, Color>> exact_from_tables(const MultiGraph& g, const ExceptionFamily& fam,
                                                        const std::vector<EdgeId>& edges, EdgeId without)
{
    const Subgraph s = induced_by_edges(g, edges);
    for (const FamilyMember& a : fam.members) {
        const auto vmap = find_isomorphism(a.graph, s.graph);
        if (!vmap)
            continue;
        const std::vector<EdgeId> emap = edge_map_from_vertex_map(a.graph, s.graph, *vmap);
        const std::vector<Color>* colors = &a.witness;
        if (without != kNoEdge) {
            // Any edge of A mapping onto `without` will do; by symmetry of the
            // tables each has c_k(A - e) = c_k(A).
            for (EdgeId ea = 0; ea < a.graph.num_edges(); ++ea)
                if (s.edge_origin[emap[ea]] == without)
                    colors = &a.witness_without[ea];
        }
        std::vector<std::pair<EdgeId, Color>> out;
        for (EdgeId ea = 0; ea < a.graph.num_edges(); ++ea)
            if ((*colors)[ea] != kUncolored)
                out.emplace_back(s.edge_origin[emap[ea]], (*colors)[ea]);
        return out;
    }
    throw Error(Errc::InvariantViolated, "component is not isomorphic to a family member");
}

class MetaRun {
public:
    MetaRun(const MultiGraph& g, int k, const ExceptionFamily* fam)
        : g_(g), k_(k), fam_(fam), in_f_(g.num_edges(), false), in_r_(g.num_edges(), false)
    {
    }

    MetaResult run()
    {
        MetaLog& log = log_;
        log.alpha = core_ratio(k_, !g_.has_parallel_edges());
        if (fam_) {
            const FamilyConstants fc = family_constants(*fam_);
            log.beta = fc.beta;
            log.gamma_ratio = fc.gamma;
        }

        std::vector<EdgeId> f = max_k_matching(g_, k_);
        log.f_size = static_cast<int>(f.size());
        if (fam_)
            log.normalize_swaps = normalize_F(g_, f, *fam_);
        in_f_ = mask_of(g_, f);

        if (fam_) {
            gamma_ = detect(g_, in_f_, *fam_);
            log.gamma = gamma_;
            alive_.assign(gamma_.size(), true);
            std::vector<ExceptionComponent> ex;
            for (const GammaEntry& q : gamma_)
                ex.push_back({q.vertices, q.edges.empty() ? 0
                                                          : static_cast<int>(q.edges.size()) -
                                                                fam_->members[q.member].optimum});
            log.r = build_exception_matching_R(g_, k_, ex);
            in_r_ = mask_of(g_, log.r);
            log.forest = star_forest(g_, in_f_, in_r_);
            check_invariants();
            for (;;) {
                if (absorb_step())
                    continue;
                if (bridge_step())
                    continue;
                break;
            }
        }
        color_all();
        return {std::move(coloring_), std::move(log_)};
    }

private:
    int gamma_index(const std::vector<VertexId>& vertices) const
    {
        for (int i = 0; i < static_cast<int>(gamma_.size()); ++i)
            if (alive_[i] && gamma_[i].vertices == vertices)
                return i;
        return -1;
    }

    void check_invariants()
    {
        std::vector<int> deg_f(g_.num_vertices(), 0), deg_r(g_.num_vertices(), 0);
        for (EdgeId e = 0; e < g_.num_edges(); ++e) {
            const auto [u, v] = g_.endpoints(e);
            if (in_f_[e]) {
                ++deg_f[u];
                ++deg_f[v];
            }
            if (in_r_[e]) {
                ++deg_r[u];
                ++deg_r[v];
            }
        }
        for (VertexId v = 0; v < g_.num_vertices(); ++v)
            if (deg_r[v] > deg_f[v])
                throw Error(Errc::InvariantViolated, "deg_R exceeds deg_F at vertex " + std::to_string(v));
        const EdgeComponents comps = edge_components(g_, in_f_);
        for (std::size_t c = 0; c < comps.vertices.size(); ++c)
            if (member_of_edges(g_, *fam_, comps.edges[c]) && gamma_index(comps.vertices[c]) == -1)
                throw Error(Errc::InvariantViolated, "a new exception component appeared in F");
        if (!star_forest(g_, in_f_, in_r_).is_star_forest())
            throw Error(Errc::InvariantViolated, "R does not induce a star forest on the components of F");
    }

    // Exception components that are leaves of the star forest, with their
    // unique R edge, in order of lowest vertex.
    struct Leaf {
        int gamma = -1;
        EdgeId xy = kNoEdge;
        VertexId x = kNoVertex;
        VertexId y = kNoVertex;
    };

    std::vector<Leaf> leaves() const
    {
        const StarForest sf = star_forest(g_, in_f_, in_r_);
        const EdgeComponents comps = edge_components(g_, in_f_);
        std::vector<Leaf> out;
        for (std::size_t c = 0; c < comps.vertices.size(); ++c) {
            if (sf.degree[c] != 1)
                continue;
            const int q = gamma_index(comps.vertices[c]);
            if (q == -1)
                continue;
            for (EdgeId e = 0; e < g_.num_edges(); ++e) {
                if (!in_r_[e])
                    continue;
                const auto [u, v] = g_.endpoints(e);
                const bool cu = comps.of_vertex[u] == static_cast<int>(c);
                const bool cv = comps.of_vertex[v] == static_cast<int>(c);
                if (cu != cv) {
                    out.push_back({q, e, cu ? u : v, cu ? v : u});
                    break;
                }
            }
        }
        return out;
    }

    // Edges of the F component containing v, with `drop` removed.
    std::vector<std::vector<EdgeId>> pieces_without(VertexId v, EdgeId drop) const
    {
        const EdgeComponents comps = edge_components(g_, in_f_);
        std::vector<bool> in(g_.num_edges(), false);
        for (EdgeId e : comps.edges[comps.of_vertex[v]])
            in[e] = e != drop;
        return edge_components(g_, in).edges;
    }

    void drop_component(int q, MetaGroup& group)
    {
        for (EdgeId e : gamma_[q].edges) {
            in_f_[e] = false;
            group.removed_f.push_back(e);
        }
        alive_[q] = false;
    }

    // Kills Gamma entries whose component changed (a center that lost yz).
    void refresh_alive()
    {
        const EdgeComponents comps = edge_components(g_, in_f_);
        for (std::size_t i = 0; i < gamma_.size(); ++i) {
            if (!alive_[i])
                continue;
            const VertexId v = gamma_[i].vertices.front();
            const int c = comps.of_vertex[v];
            alive_[i] = c != -1 && comps.vertices[c] == gamma_[i].vertices && comps.edges[c] == gamma_[i].edges;
        }
    }

    bool absorb_step()
    {
        for (const Leaf& leaf : leaves()) {
            const EdgeComponents comps = edge_components(g_, in_f_);
            const int p = comps.of_vertex[leaf.y];
            for (EdgeId yz : g_.incident(leaf.y)) {
                if (!in_f_[yz] || comps.of_vertex[g_.other(yz, leaf.y)] != p)
                    continue;
                bool clean = true;
                for (const auto& piece : pieces_without(leaf.y, yz))
                    if (member_of_edges(g_, *fam_, piece))
                        clean = false;
                if (!clean)
                    continue;

                const VertexId z = g_.other(yz, leaf.y);
                Absorb a;
                a.group.kind = MetaGroup::Kind::Absorb;
                a.q = leaf.gamma;
                a.x = leaf.x;
                a.y = leaf.y;
                a.xy = leaf.xy;
                a.yz = yz;
                a.q_edges = gamma_[leaf.gamma].edges;
                in_r_[leaf.xy] = false;
                a.group.removed_r.push_back(leaf.xy);
                drop_component(leaf.gamma, a.group);
                in_f_[yz] = false;
                a.group.removed_f.push_back(yz);
                for (EdgeId zw : g_.incident(z)) {
                    if (!in_r_[zw])
                        continue;
                    const VertexId w = g_.other(zw, z);
                    const int q2 = owning_gamma(w);
                    if (q2 == -1)
                        throw Error(Errc::InvariantViolated, "R edge at z does not come from an exception leaf");
                    a.q2 = q2;
                    a.z = z;
                    a.w = w;
                    a.zw = zw;
                    a.q2_edges = gamma_[q2].edges;
                    in_r_[zw] = false;
                    a.group.removed_r.push_back(zw);
                    drop_component(q2, a.group);
                    break;
                }
                refresh_alive();
                check_invariants();
                absorbs_.push_back(std::move(a));
                return true;
            }
        }
        return false;
    }

    int owning_gamma(VertexId v) const
    {
        for (int i = 0; i < static_cast<int>(gamma_.size()); ++i)
            if (alive_[i] && std::binary_search(gamma_[i].vertices.begin(), gamma_[i].vertices.end(), v))
                return i;
        return -1;
    }

    bool bridge_step()
    {
        const std::vector<Leaf> ls = leaves();
        if (ls.empty())
            return false;
        const Leaf& leaf = ls.front();
        EdgeId yz = kNoEdge;
        for (EdgeId e : g_.incident(leaf.y))
            if (in_f_[e]) {
                yz = e;
                break;
            }
        if (yz == kNoEdge)
            throw Error(Errc::InvariantViolated, "y has no F edge");
        const VertexId z = g_.other(yz, leaf.y);
        std::vector<EdgeId> piece;
        int found = 0;
        for (const auto& part : pieces_without(leaf.y, yz))
            if (member_of_edges(g_, *fam_, part)) {
                ++found;
                piece = part;
            }
        const Subgraph ps = induced_by_edges(g_, piece);
        const bool has_z =
            found == 1 && std::find(ps.vertex_origin.begin(), ps.vertex_origin.end(), z) != ps.vertex_origin.end();
        if (!has_z)
            throw Error(Errc::InvariantViolated, "P - yz must hold exactly one exception piece, at z");
        for (EdgeId e = 0; e < g_.num_edges(); ++e)
            if (in_r_[e])
                for (VertexId v : {g_.endpoints(e).u, g_.endpoints(e).v})
                    if (std::find(ps.vertex_origin.begin(), ps.vertex_origin.end(), v) != ps.vertex_origin.end())
                        throw Error(Errc::InvariantViolated, "the exception piece P_yz is touched by R");

        Bridge b;
        b.group.kind = MetaGroup::Kind::Bridge;
        b.q_edges = gamma_[leaf.gamma].edges;
        b.piece = piece;
        b.y = leaf.y;
        b.z = z;
        b.yz = yz;
        in_r_[leaf.xy] = false;
        b.group.removed_r.push_back(leaf.xy);
        drop_component(leaf.gamma, b.group);
        in_f_[yz] = false;
        b.group.removed_f.push_back(yz);
        for (EdgeId e : piece) {
            in_f_[e] = false;
            b.group.removed_f.push_back(e);
        }
        refresh_alive();
        check_invariants();
        bridges_.push_back(std::move(b));
        return true;
    }

    void put(const std::vector<std::pair<EdgeId, Color>>& colors)
    {
        for (auto [e, c] : colors)
            coloring_.assign(e, c);
    }

    // Adds `part` plus the edge `link` (joining `inner`, a vertex of part, to
    // `attach`, already in S), permuting part's colors so link can take a
    // color free at attach.
    void attach(std::vector<std::pair<EdgeId, Color>> part, EdgeId link, VertexId inner, VertexId attach)
    {
        ColorSet used_inner;
        for (auto [e, c] : part)
            if (g_.endpoints(e).has(inner))
                used_inner.insert(c);
        const Color a = (ColorSet::palette(k_) - used_inner).lowest();
        const Color b = coloring_.free(attach).lowest();
        if (a == kUncolored || b == kUncolored)
            throw Error(Errc::InvariantViolated, "no free color to attach a removed group");
        for (auto& [e, c] : part) {
            if (c == a)
                c = b;
            else if (c == b)
                c = a;
        }
        put(part);
        coloring_.assign(link, b);
    }

    EdgeId first_edge_at(const std::vector<EdgeId>& edges, VertexId v) const
    {
        for (EdgeId e : edges)
            if (g_.endpoints(e).has(v))
                return e;
        throw Error(Errc::InvariantViolated, "component has no edge at the attachment vertex");
    }

    void check_group_ratio(const MetaGroup& group, const Rational& bound)
    {
        if (Rational(group.colored, group.removed) < bound)
            throw Error(Errc::InvariantViolated, "removed group colored below its ratio");
    }

    void color_all()
    {
        const EdgeComponents comps = edge_components(g_, in_f_);
        for (std::size_t c = 0; c < comps.vertices.size(); ++c) {
            const std::vector<EdgeId>& edges = comps.edges[c];
            if (fam_ && gamma_index(comps.vertices[c]) != -1) {
                const auto colors = exact_from_tables(g_, *fam_, edges, kNoEdge);
                put(colors);
                ++log_.exact_components;
                log_.exact_edges += static_cast<int>(edges.size());
                log_.exact_colored += static_cast<int>(colors.size());
                continue;
            }
            const Subgraph s = induced_by_edges(g_, edges);
            const std::vector<Color> colors = core_color(s.graph, k_);
            const int got = count_colored(colors);
            if (!is_guarantee_exception(s.graph) && got < log_.alpha.ceil_times(s.graph.num_edges()))
                throw Error(Errc::CoreRatioMiss, std::to_string(got) + " of " + std::to_string(s.graph.num_edges()) +
                                                     " colored on a component, below " + log_.alpha.str());
            for (EdgeId e = 0; e < s.graph.num_edges(); ++e)
                if (colors[e] != kUncolored)
                    coloring_.assign(s.edge_origin[e], colors[e]);
            ++log_.core_components;
            log_.core_edges += s.graph.num_edges();
            log_.core_colored += got;
        }

        for (Bridge& b : bridges_) {
            const auto q = exact_from_tables(g_, *fam_, b.q_edges, kNoEdge);
            put(q);
            const auto p = exact_from_tables(g_, *fam_, b.piece, kNoEdge);
            attach(p, b.yz, b.z, b.y);
            b.group.colored = static_cast<int>(q.size() + p.size()) + 1;
            b.group.removed = static_cast<int>(b.group.removed_f.size());
            check_group_ratio(b.group, log_.beta);
            log_.groups.push_back(b.group);
        }
        for (Absorb& a : absorbs_) {
            const auto q = exact_from_tables(g_, *fam_, a.q_edges, first_edge_at(a.q_edges, a.x));
            attach(q, a.xy, a.x, a.y);
            a.group.colored = static_cast<int>(q.size()) + 1;
            if (a.q2 != -1) {
                const auto q2 = exact_from_tables(g_, *fam_, a.q2_edges, first_edge_at(a.q2_edges, a.w));
                attach(q2, a.zw, a.w, a.z);
                a.group.colored += static_cast<int>(q2.size()) + 1;
            }
            a.group.removed = static_cast<int>(a.group.removed_f.size());
            check_group_ratio(a.group, log_.gamma_ratio);
            log_.groups.push_back(a.group);
        }

        const Validation ok = validate_coloring(g_, coloring_);
        if (!ok)
            throw Error(Errc::InvariantViolated, "assembled coloring is improper: " + ok.message);
        log_.colored = coloring_.colored_count();
    }

    struct Absorb {
        MetaGroup group;
        int q = -1;
        int q2 = -1;
        VertexId x = kNoVertex, y = kNoVertex, z = kNoVertex, w = kNoVertex;
        EdgeId xy = kNoEdge, yz = kNoEdge, zw = kNoEdge;
        std::vector<EdgeId> q_edges, q2_edges;
    };

    struct Bridge {
        MetaGroup group;
        std::vector<EdgeId> q_edges, piece;
        VertexId y = kNoVertex, z = kNoVertex;
        EdgeId yz = kNoEdge;
    };

    const MultiGraph& g_;
    int k_;
    const ExceptionFamily* fam_;
    std::vector<bool> in_f_;
    std::vector<bool> in_r_;
    std::vector<GammaEntry> gamma_;
    std::vector<bool> alive_;
    std::vector<Absorb> absorbs_;
    std::vector<Bridge> bridges_;
    MetaLog log_;
    PartialColoring coloring_{g_, k_};
};

} // namespace

MetaResult run_meta(const MultiGraph& g, int k, const ExceptionFamily* fam)
{
    if (k < 3 || k > 7)
        throw Error(Errc::UnsupportedDelta, "meta-algorithm covers k = 3..7");
    if (k >= 4 && g.has_parallel_edges())
        throw Error(Errc::NotSimple, "k >= 4 needs a simple graph");
    if (fam && fam->k != k)
        throw Error(Errc::PaletteMismatch, "family built for k = " + std::to_string(fam->k));
    return MetaRun(g, k, fam).run();
}

} // namespace kecs
