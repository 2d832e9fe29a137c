#include "kecs/factor.hpp"

#include <algorithm>
#include <numeric>

#include "kecs/blossom.hpp"
#include "kecs/error.hpp"

namespace kecs {

// Gadget: every edge end (v, e) becomes an outer vertex; the two outer
// vertices of e are joined. Each v also gets deg(v) - upper blockers that
// must be matched to its outer vertices and upper - lower optional
// absorbers. An outer vertex matched locally means "e not chosen at v".
// A bonus M per covered outer vertex or blocker makes full coverage
// dominate the real weights.
FactorResult max_weight_fg_factor(const MultiGraph& g, const DegreeBounds& bounds,
                                  std::span<const std::int64_t> weight)
{
    const int n = g.num_vertices();
    const int m = g.num_edges();
    if (static_cast<int>(bounds.lower.size()) != n || static_cast<int>(bounds.upper.size()) != n ||
        static_cast<int>(weight.size()) != m)
        throw Error(Errc::BadDimensions, "degree bounds or weights do not match the graph");

    std::int64_t total = 0;
    for (std::int64_t w : weight) {
        if (w < 0)
            throw Error(Errc::PreconditionViolated, "factor weights must be non-negative");
        total += w;
    }
    const std::int64_t bonus = total + 1;

    std::vector<int> outer_base(n, 0);
    int next = 0;
    std::vector<int> hi(n), lo(n);
    for (VertexId v = 0; v < n; ++v) {
        lo[v] = bounds.lower[v];
        hi[v] = std::min(bounds.upper[v], g.degree(v));
        if (lo[v] < 0 || lo[v] > bounds.upper[v] || lo[v] > g.degree(v))
            throw Error(Errc::Infeasible, "vertex " + std::to_string(v) + " cannot meet its degree window");
        outer_base[v] = next;
        next += g.degree(v);
    }
    // slot of e among v's incident edges
    auto outer = [&](VertexId v, EdgeId e) {
        const auto inc = g.incident(v);
        return outer_base[v] + static_cast<int>(std::find(inc.begin(), inc.end(), e) - inc.begin());
    };

    std::vector<WeightedEdge> edges;
    std::vector<int> blocker_begin(n), absorber_begin(n);
    for (VertexId v = 0; v < n; ++v) {
        blocker_begin[v] = next;
        next += g.degree(v) - hi[v];
        absorber_begin[v] = next;
        next += hi[v] - lo[v];
    }
    for (EdgeId e = 0; e < m; ++e) {
        const auto [u, v] = g.endpoints(e);
        edges.push_back({outer(u, e), outer(v, e), weight[e] + 2 * bonus});
    }
    int must_cover = 0;
    for (VertexId v = 0; v < n; ++v) {
        const int d = g.degree(v);
        must_cover += d + (d - hi[v]);
        for (int i = 0; i < d; ++i) {
            for (int b = 0; b < d - hi[v]; ++b)
                edges.push_back({outer_base[v] + i, blocker_begin[v] + b, 2 * bonus});
            for (int a = 0; a < hi[v] - lo[v]; ++a)
                edges.push_back({outer_base[v] + i, absorber_begin[v] + a, bonus});
        }
    }

    const std::vector<int> mate = max_weight_matching(next, edges);
    int covered = 0;
    for (VertexId v = 0; v < n; ++v) {
        for (int i = 0; i < g.degree(v); ++i)
            covered += mate[outer_base[v] + i] >= 0 ? 1 : 0;
        for (int b = 0; b < g.degree(v) - hi[v]; ++b)
            covered += mate[blocker_begin[v] + b] >= 0 ? 1 : 0;
    }
    if (covered != must_cover)
        throw Error(Errc::Infeasible, "no edge set meets every degree window");

    FactorResult out;
    for (EdgeId e = 0; e < m; ++e) {
        const auto [u, v] = g.endpoints(e);
        if (mate[outer(u, e)] == outer(v, e)) {
            out.edges.push_back(e);
            out.weight += weight[e];
        }
    }
    return out;
}

std::vector<EdgeId> max_k_matching(const MultiGraph& g, int k)
{
    if (k < 1)
        throw Error(Errc::PreconditionViolated, "k-matching needs k >= 1");
    DegreeBounds b{std::vector<int>(g.num_vertices(), 0), std::vector<int>(g.num_vertices(), k)};
    const std::vector<std::int64_t> ones(g.num_edges(), 1);
    return max_weight_fg_factor(g, b, ones).edges;
}

namespace {

std::vector<int> owner_map(const MultiGraph& g, const std::vector<ExceptionComponent>& gamma)
{
    std::vector<int> owner(g.num_vertices(), -1);
    for (int q = 0; q < static_cast<int>(gamma.size()); ++q)
        for (VertexId v : gamma[q].vertices) {
            if (v < 0 || v >= g.num_vertices())
                throw Error(Errc::IndexOutOfRange, "exception component vertex out of range");
            if (owner[v] != -1)
                throw Error(Errc::PreconditionViolated, "exception components overlap");
            owner[v] = q;
        }
    return owner;
}

bool leaves_some_component(const std::vector<int>& owner, Endpoints ends)
{
    return owner[ends.u] != owner[ends.v] && (owner[ends.u] != -1 || owner[ends.v] != -1);
}

} // namespace

int touched_deficit(const MultiGraph& g, std::span<const EdgeId> r, const std::vector<ExceptionComponent>& gamma)
{
    const std::vector<int> owner = owner_map(g, gamma);
    std::vector<bool> touched(gamma.size(), false);
    for (EdgeId e : r) {
        const auto [u, v] = g.endpoints(e);
        if (owner[u] != owner[v]) {
            if (owner[u] != -1)
                touched[owner[u]] = true;
            if (owner[v] != -1)
                touched[owner[v]] = true;
        }
    }
    int sum = 0;
    for (std::size_t q = 0; q < gamma.size(); ++q)
        if (touched[q])
            sum += gamma[q].deficit;
    return sum;
}

std::vector<EdgeId> build_exception_matching_R(const MultiGraph& g, int k,
                                               const std::vector<ExceptionComponent>& gamma)
{
    if (gamma.empty())
        return {};
    const std::vector<int> owner = owner_map(g, gamma);
    const int n = g.num_vertices();
    const int q_count = static_cast<int>(gamma.size());

    // Host graph: leaving edges of g, then v-u_Q spokes, then u_Q-w_Q.
    std::vector<std::pair<int, int>> pairs;
    std::vector<EdgeId> from_g;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (leaves_some_component(owner, g.endpoints(e))) {
            pairs.emplace_back(g.endpoints(e).u, g.endpoints(e).v);
            from_g.push_back(e);
        }
    const int leaving = static_cast<int>(pairs.size());
    for (int q = 0; q < q_count; ++q)
        for (VertexId v : gamma[q].vertices)
            pairs.emplace_back(v, n + 2 * q);
    std::vector<std::int64_t> weight(pairs.size(), 0);
    for (int q = 0; q < q_count; ++q) {
        pairs.emplace_back(n + 2 * q, n + 2 * q + 1);
        weight.push_back(gamma[q].deficit);
    }
    const MultiGraph host = build_graph(n + 2 * q_count, pairs, false);

    DegreeBounds b;
    b.lower.assign(host.num_vertices(), 0);
    b.upper.assign(host.num_vertices(), k);
    for (VertexId v = 0; v < n; ++v)
        if (owner[v] != -1)
            b.lower[v] = 1;
    for (int q = 0; q < q_count; ++q) {
        b.upper[n + 2 * q] = static_cast<int>(gamma[q].vertices.size());
        b.upper[n + 2 * q + 1] = 1;
    }
    const FactorResult factor = max_weight_fg_factor(host, b, weight);

    std::vector<EdgeId> r;
    for (EdgeId e : factor.edges)
        if (e < leaving)
            r.push_back(from_g[e]);
    std::sort(r.begin(), r.end());

    // Drop edges while the touched deficit stays maximal.
    const int best = touched_deficit(g, r, gamma);
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::vector<EdgeId> trial = r;
            trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
            if (touched_deficit(g, trial, gamma) == best) {
                r = std::move(trial);
                shrunk = true;
                break;
            }
        }
    }
    return r;
}

} // namespace kecs
