#include "kecs/patterns.hpp"

#include <algorithm>
#include <string>

#include "kecs/error.hpp"

namespace kecs {

MultiGraph complete_graph(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    return build_graph(n, pairs, true);
}

MultiGraph pattern_graph(std::string_view name)
{
    if (name == "G3")
        return build_graph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}}, false);
    if (name == "B3") // K4 on {0,1,2,3} with edge 0-1 subdivided by 4
        return build_graph(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 1}}, true);
    if (name == "Gstar5") // cycle 0-1-2-3 with 0-1 doubled, vertex 4 joined to 2 and 3
        return build_graph(5, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}}, false);
    if (name.size() == 2 && name[0] == 'K' && name[1] >= '2' && name[1] <= '8')
        return complete_graph(name[1] - '0');
    throw Error(Errc::UnknownPattern, "no pattern named '" + std::string(name) + "'");
}

namespace {

std::vector<std::vector<int>> multiplicity_matrix(const MultiGraph& g)
{
    const int n = g.num_vertices();
    std::vector<std::vector<int>> mat(n, std::vector<int>(n, 0));
    for (const Endpoints& e : g.edges()) {
        ++mat[e.u][e.v];
        ++mat[e.v][e.u];
    }
    return mat;
}

// Degree plus sorted neighbor-multiplicity profile; cheap invariant for pruning.
std::vector<std::vector<int>> vertex_signatures(const MultiGraph& g, const std::vector<std::vector<int>>& mat)
{
    const int n = g.num_vertices();
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
        sig[v].push_back(g.degree(v));
        std::vector<int> nb;
        for (int w = 0; w < n; ++w)
            if (mat[v][w] > 0)
                nb.push_back(mat[v][w] * 64 + g.degree(w));
        std::sort(nb.begin(), nb.end());
        sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    return sig;
}

} // namespace

std::optional<std::vector<VertexId>> find_isomorphism(const MultiGraph& a, const MultiGraph& b)
{
    const int n = a.num_vertices();
    if (n != b.num_vertices() || a.num_edges() != b.num_edges())
        return std::nullopt;
    const auto ma = multiplicity_matrix(a);
    const auto mb = multiplicity_matrix(b);
    const auto sa = vertex_signatures(a, ma);
    const auto sb = vertex_signatures(b, mb);
    {
        auto x = sa, y = sb;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y)
            return std::nullopt;
    }
    // Map a's vertices in an order that keeps each new vertex adjacent to mapped ones.
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    while (static_cast<int>(order.size()) < n) {
        int best = -1, best_links = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v])
                continue;
            int links = 0;
            for (int w : order)
                links += ma[v][w];
            if (links > best_links || (links == best_links && a.degree(v) > a.degree(best)))
                best = v, best_links = links;
        }
        placed[best] = true;
        order.push_back(best);
    }
    std::vector<VertexId> map(n, kNoVertex);
    std::vector<bool> used(n, false);
    auto extend = [&](auto&& self, int depth) -> bool {
        if (depth == n)
            return true;
        const int v = order[depth];
        for (int w = 0; w < n; ++w) {
            if (used[w] || sa[v] != sb[w])
                continue;
            bool ok = true;
            for (int i = 0; i < depth && ok; ++i)
                ok = ma[v][order[i]] == mb[w][map[order[i]]];
            if (!ok)
                continue;
            map[v] = w;
            used[w] = true;
            if (self(self, depth + 1))
                return true;
            used[w] = false;
            map[v] = kNoVertex;
        }
        return false;
    };
    if (!extend(extend, 0))
        return std::nullopt;
    return map;
}

std::vector<EdgeId> edge_map_from_vertex_map(const MultiGraph& a, const MultiGraph& b,
                                             const std::vector<VertexId>& vmap)
{
    std::vector<EdgeId> out(a.num_edges(), kNoEdge);
    std::vector<bool> taken(b.num_edges(), false);
    for (EdgeId e = 0; e < a.num_edges(); ++e) {
        const VertexId x = vmap[a.endpoints(e).u];
        const VertexId y = vmap[a.endpoints(e).v];
        for (EdgeId f : b.incident(x)) {
            if (!taken[f] && b.other(f, x) == y) {
                taken[f] = true;
                out[e] = f;
                break;
            }
        }
    }
    return out;
}

bool isomorphic(const MultiGraph& a, const MultiGraph& b) { return find_isomorphism(a, b).has_value(); }

bool match_small_pattern(const MultiGraph& g, std::string_view pattern)
{
    return isomorphic(g, pattern_graph(pattern));
}

} // namespace kecs
