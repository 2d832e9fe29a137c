#include "kecs/generators.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "kecs/error.hpp"
#include "kecs/patterns.hpp"

namespace kecs {

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound <= 1)
        return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do
        x = engine_();
    while (x >= limit);
    return x % bound;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * (1.0 / 9007199254740992.0); }

MultiGraph make_b_delta(int d)
{
    if (d < 1)
        throw Error(Errc::BadTag, "B(d) needs d >= 1");
    if (d % 2 == 0)
        throw Error(Errc::EvenDelta, "B(d) is defined for odd d only, got " + std::to_string(d));
    const int ell = (d - 1) / 2;
    const int apex = d + 1;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u <= d; ++u)
        for (int v = u + 1; v <= d; ++v)
            if (!(u % 2 == 0 && v == u + 1 && u < 2 * ell))
                pairs.emplace_back(u, v);
    for (int u = 0; u < 2 * ell; ++u)
        pairs.emplace_back(u, apex);
    return build_graph(d + 2, pairs, true);
}

MultiGraph make_petersen()
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i) {
        pairs.emplace_back(i, (i + 1) % 5);
        pairs.emplace_back(i, i + 5);
        pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return build_graph(10, pairs, true);
}

MultiGraph make_two_g3_bridge()
{
    return build_graph(6, {{0, 1}, {0, 1}, {1, 2}, {2, 0}, {3, 4}, {3, 4}, {4, 5}, {5, 3}, {2, 5}}, false);
}

std::vector<MultiGraph> triangle_preimages(const MultiGraph& h)
{
    std::vector<MultiGraph> out;
    const int n = h.num_vertices();
    for (VertexId v = 0; v < n; ++v) {
        if (h.degree(v) < 1 || h.degree(v) > 3)
            continue;
        // v becomes triangle {v, n, n+1}; its incident edges go one per corner.
        const VertexId corners[3] = {v, n, n + 1};
        std::vector<std::pair<int, int>> pairs;
        int slot = 0;
        for (EdgeId e = 0; e < h.num_edges(); ++e) {
            Endpoints ep = h.endpoints(e);
            if (ep.u == v)
                ep.u = corners[slot++];
            else if (ep.v == v)
                ep.v = corners[slot++];
            pairs.emplace_back(ep.u, ep.v);
        }
        pairs.emplace_back(corners[0], corners[1]);
        pairs.emplace_back(corners[1], corners[2]);
        pairs.emplace_back(corners[0], corners[2]);
        const MultiGraph probe = build_graph(n + 2, pairs, false);
        MultiGraph g = probe.has_parallel_edges() ? probe : build_graph(n + 2, pairs, true);
        const bool seen = std::any_of(out.begin(), out.end(), [&](const MultiGraph& x) { return isomorphic(x, g); });
        if (!seen)
            out.push_back(std::move(g));
    }
    return out;
}

namespace {

std::string lower(std::string_view s)
{
    std::string out(s);
    for (char& ch : out)
        ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return out;
}

// Parses a positive integer occupying all of s, optionally wrapped in parentheses.
bool parse_index(std::string_view s, int& out)
{
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    if (s.empty() || s.size() > 3)
        return false;
    int value = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            return false;
        value = value * 10 + (ch - '0');
    }
    out = value;
    return true;
}

MultiGraph preimage(std::string_view base, std::string_view tag, std::string_view rest)
{
    int i = 0;
    if (!parse_index(rest, i))
        throw Error(Errc::BadTag, "bad preimage index in '" + std::string(tag) + "'");
    const auto all = triangle_preimages(pattern_graph(base));
    if (i < 1 || i > static_cast<int>(all.size()))
        throw Error(Errc::BadTag, "preimage index must be 1.." + std::to_string(all.size()));
    return all[i - 1];
}

} // namespace

MultiGraph make_doubled_c5()
{
    // 5-cycle 0-2-4-1-3-0 with the non-adjacent sides 0-2 and 1-3 doubled.
    return build_graph(5, {{0, 2}, {0, 2}, {2, 4}, {1, 4}, {1, 3}, {1, 3}, {0, 3}}, false);
}

MultiGraph gen_named(std::string_view tag)
{
    const std::string t = lower(tag);
    if (t == "g3")
        return pattern_graph("G3");
    if (t == "b3")
        return pattern_graph("B3");
    if (t == "gstar5")
        return pattern_graph("Gstar5");
    if (t == "petersen")
        return make_petersen();
    if (t == "twog3bridge")
        return make_two_g3_bridge();
    if (t == "doubledc5")
        return make_doubled_c5();
    if (t == "k3,3")
        return build_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}, true);
    const std::string_view tv(t);
    if (tv.starts_with("b3trianglepreimage"))
        return preimage("B3", tag, tv.substr(18));
    if (tv.starts_with("gstar5trianglepreimage"))
        return preimage("Gstar5", tag, tv.substr(22));
    int n = 0;
    if (tv.starts_with("k")) {
        std::string_view body = tv.substr(1);
        const bool minus_edge = body.ends_with("-e");
        if (minus_edge)
            body.remove_suffix(2);
        if (parse_index(body, n) && n >= 1) {
            if (!minus_edge)
                return complete_graph(n);
            if (n < 2)
                throw Error(Errc::BadTag, "K1-e has no edge to remove");
            std::vector<std::pair<int, int>> pairs;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!(u == 0 && v == 1))
                        pairs.emplace_back(u, v);
            return build_graph(n, pairs, true);
        }
    }
    if (tv.starts_with("c") && parse_index(tv.substr(1), n) && n >= 3) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            pairs.emplace_back(i, (i + 1) % n);
        return build_graph(n, pairs, true);
    }
    if (tv.starts_with("b") && parse_index(tv.substr(1), n))
        return make_b_delta(n);
    throw Error(Errc::BadTag, "unknown graph tag '" + std::string(tag) + "'");
}

MultiGraph gen_random_bounded_degree(const RandomGraphParams& p)
{
    if (p.n < 2 || p.max_degree < 1)
        throw Error(Errc::UnsatisfiableParameters, "need n >= 2 and max degree >= 1");
    if (p.max_degree == 1 && p.n > 2)
        throw Error(Errc::UnsatisfiableParameters, "a connected graph on more than 2 vertices needs degree >= 2");
    if (!(p.density >= 0.0 && p.density <= 1.0))
        throw Error(Errc::UnsatisfiableParameters, "density must lie in [0, 1]");
    Rng rng(p.seed);
    const int n = p.n;
    std::vector<int> deg(n, 0);
    std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
    std::vector<std::pair<int, int>> pairs;
    auto add = [&](int u, int v) {
        pairs.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
        ++mult[u][v];
        ++mult[v][u];
    };

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    std::vector<int> open{perm[0]};
    for (int i = 1; i < n; ++i) {
        const std::size_t pick = rng.below(open.size());
        const int parent = open[pick];
        add(parent, perm[i]);
        if (deg[parent] == p.max_degree) {
            open[pick] = open.back();
            open.pop_back();
        }
        if (deg[perm[i]] < p.max_degree)
            open.push_back(perm[i]);
    }

    const long long target = static_cast<long long>(p.density * (static_cast<long long>(n) * p.max_degree / 2) + 0.5);
    const int max_mult = p.multi ? 2 : 1;
    int misses = 0;
    const int miss_limit = 50 * n + 200;
    while (static_cast<long long>(pairs.size()) < target && misses < miss_limit) {
        const int u = static_cast<int>(rng.below(n));
        const int v = static_cast<int>(rng.below(n));
        if (u == v || deg[u] >= p.max_degree || deg[v] >= p.max_degree || mult[u][v] >= max_mult) {
            ++misses;
            continue;
        }
        add(std::min(u, v), std::max(u, v));
        misses = 0;
    }
    return build_graph(n, pairs, !p.multi);
}

MultiGraph gen_random_bounded_degree(int n, int max_degree, double density, std::uint64_t seed)
{
    RandomGraphParams p;
    p.n = n;
    p.max_degree = max_degree;
    p.density = density;
    p.seed = seed;
    return gen_random_bounded_degree(p);
}

MultiGraph gen_linked_patterns(const LinkedPatternParams& p)
{
    if (p.copies < 1 || p.extra_vertices < 0 || p.links < 0 || p.max_degree < 1)
        throw Error(Errc::UnsatisfiableParameters, "need at least one copy and non-negative counts");
    const MultiGraph piece = pattern_graph(p.pattern);
    const int block = piece.num_vertices();
    const int n = block * p.copies + p.extra_vertices;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> deg(n, 0);
    std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
    auto add = [&](int u, int v) {
        pairs.emplace_back(std::min(u, v), std::max(u, v));
        ++deg[u];
        ++deg[v];
        ++mult[u][v];
        ++mult[v][u];
    };
    for (int c = 0; c < p.copies; ++c)
        for (const Endpoints& e : piece.edges())
            add(c * block + e.u, c * block + e.v);

    Rng rng(p.seed);
    auto block_of = [&](int v) { return v < block * p.copies ? v / block : p.copies + (v - block * p.copies); };
    // Joins two vertices of different blocks; parallel only when allowed.
    auto try_link = [&](int u, int v) {
        if (u == v || block_of(u) == block_of(v) || deg[u] >= p.max_degree || deg[v] >= p.max_degree)
            return false;
        if (mult[u][v] > 0 && !p.multi)
            return false;
        add(u, v);
        return true;
    };
    int placed = 0;
    int misses = 0;
    const int miss_limit = 50 * n + 200;
    while (placed < p.links && misses < miss_limit) {
        if (try_link(static_cast<int>(rng.below(n)), static_cast<int>(rng.below(n)))) {
            ++placed;
            misses = 0;
        } else {
            ++misses;
        }
    }
    return build_graph(n, pairs, !p.multi && !piece.has_parallel_edges());
}

} // namespace kecs
