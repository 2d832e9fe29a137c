#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "helpers.hpp"
#include "kecs/decompose.hpp"
#include "kecs/error.hpp"
#include "kecs/generators.hpp"
#include "kecs/graph.hpp"
#include "kecs/patterns.hpp"
#include "kecs/rational.hpp"

using namespace kecs;
using kecs::test::count_components;
using kecs::test::relabel;
using kecs::test::without_edge;

namespace {

Errc code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::SyntaxError;
}

} // namespace

TEST_CASE("build_graph basics")
{
    const MultiGraph one = build_graph(2, {{0, 1}}, true);
    CHECK(one.num_edges() == 1);
    CHECK(one.max_degree() == 1);

    const MultiGraph g3 = build_graph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}}, false);
    CHECK(g3.max_degree() == 3);
    CHECK(g3.multiplicity(0, 1) == 2);
    CHECK(g3.find_edge(1, 0) == 0);
    CHECK(g3.has_parallel_edges());

    const MultiGraph k5 = complete_graph(5);
    CHECK(k5.num_edges() == 10);
    CHECK(k5.max_degree() == 4);
    CHECK(!k5.has_parallel_edges());
}

TEST_CASE("build_graph rejects bad input")
{
    CHECK(code_of([] { build_graph(2, {{1, 1}}, false); }) == Errc::LoopEdge);
    CHECK(code_of([] { build_graph(2, {{0, 1}, {1, 0}}, true); }) == Errc::DuplicateEdgeInSimpleMode);
    CHECK(code_of([] { build_graph(2, {{0, 2}}, true); }) == Errc::IndexOutOfRange);
}

TEST_CASE("incident lists are sorted and degrees sum to twice the edge count")
{
    for (std::uint64_t s = 1; s <= 50; ++s) {
        RandomGraphParams p;
        p.n = 3 + static_cast<int>(s % 20);
        p.max_degree = 2 + static_cast<int>(s % 5);
        p.seed = s;
        p.multi = s % 2 == 0;
        const MultiGraph g = gen_random_bounded_degree(p);
        int sum = 0;
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            sum += g.degree(v);
            const auto inc = g.incident(v);
            CHECK(std::is_sorted(inc.begin(), inc.end()));
        }
        CHECK(sum == 2 * g.num_edges());
    }
}

TEST_CASE("decompose on small graphs")
{
    SUBCASE("K4 is one block without bridges")
    {
        const Decomposition d = decompose(complete_graph(4));
        CHECK(d.blocks.size() == 1);
        CHECK(d.bridges.empty());
        CHECK(d.cut_vertices.empty());
    }
    SUBCASE("two bridged G3 copies have a single bridge")
    {
        const MultiGraph g = make_two_g3_bridge();
        const Decomposition d = decompose(g);
        REQUIRE(d.bridges.size() == 1);
        const Endpoints e = g.endpoints(d.bridges[0]);
        CHECK(g.degree(e.u) == 3);
        CHECK(g.degree(e.v) == 3);
        CHECK(g.multiplicity(e.u, e.v) == 1);
    }
    SUBCASE("path on four vertices")
    {
        const Decomposition d = decompose(build_graph(4, {{0, 1}, {1, 2}, {2, 3}}, true));
        CHECK(d.bridges.size() == 3);
        CHECK(d.cut_vertices == std::vector<VertexId>{1, 2});
    }
    SUBCASE("a doubled edge is one block and not a bridge")
    {
        const Decomposition d = decompose(build_graph(2, {{0, 1}, {0, 1}}, false));
        CHECK(d.blocks.size() == 1);
        CHECK(d.bridges.empty());
    }
}

TEST_CASE("decompose: exactly the bridges disconnect")
{
    for (std::uint64_t s = 1; s <= 60; ++s) {
        RandomGraphParams p;
        p.n = 4 + static_cast<int>(s % 12);
        p.max_degree = 3;
        p.density = 0.4 + 0.01 * static_cast<double>(s % 50);
        p.seed = s;
        p.multi = s % 3 == 0;
        const MultiGraph g = gen_random_bounded_degree(p);
        const Decomposition d = decompose(g);
        const int base = count_components(g);
        CHECK(d.num_components == base);
        std::vector<bool> is_bridge(g.num_edges());
        for (EdgeId e : d.bridges)
            is_bridge[e] = true;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            CHECK(count_components(without_edge(g, e)) == base + (is_bridge[e] ? 1 : 0));
            if (is_bridge[e])
                CHECK(d.blocks[d.block_of_edge[e]].size() == 1);
        }
        // Cut vertices are the vertices shared by two or more blocks.
        std::vector<std::vector<int>> blocks_at(g.num_vertices());
        for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b)
            for (EdgeId e : d.blocks[b]) {
                for (VertexId v : {g.endpoints(e).u, g.endpoints(e).v})
                    if (blocks_at[v].empty() || blocks_at[v].back() != b)
                        blocks_at[v].push_back(b);
            }
        std::vector<VertexId> shared;
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            std::sort(blocks_at[v].begin(), blocks_at[v].end());
            blocks_at[v].erase(std::unique(blocks_at[v].begin(), blocks_at[v].end()), blocks_at[v].end());
            if (blocks_at[v].size() >= 2)
                shared.push_back(v);
        }
        std::vector<VertexId> cuts = d.cut_vertices;
        std::sort(cuts.begin(), cuts.end());
        CHECK(cuts == shared);
    }
}

TEST_CASE("contract_triangle")
{
    SUBCASE("K4 collapses to a doubled-edge multigraph")
    {
        const Contraction c = contract_triangle(complete_graph(4), {0, 1, 2});
        CHECK(c.graph.num_vertices() == 2);
        CHECK(c.graph.num_edges() == 3);
        CHECK(c.graph.multiplicity(0, 1) == 3);
    }
    SUBCASE("K3 collapses to a single vertex")
    {
        const Contraction c = contract_triangle(complete_graph(3), {0, 1, 2});
        CHECK(c.graph.num_vertices() == 1);
        CHECK(c.graph.num_edges() == 0);
    }
    SUBCASE("B3 loses three edges")
    {
        const MultiGraph b3 = gen_named("B3");
        std::array<VertexId, 3> t{};
        REQUIRE(find_triangle(b3, t));
        const Contraction c = contract_triangle(b3, t);
        CHECK(c.graph.num_edges() == 4);
        CHECK(c.graph.num_vertices() == 3);
        CHECK(c.graph.max_degree() <= 3);
    }
    SUBCASE("errors")
    {
        const MultiGraph path = build_graph(4, {{0, 1}, {1, 2}, {2, 3}}, true);
        CHECK(code_of([&] { contract_triangle(path, {0, 1, 2}); }) == Errc::NotATriangle);
        CHECK(code_of([] { contract_triangle(gen_named("G3"), {0, 1, 2}); }) == Errc::DoubledTriangleEdge);
    }
    SUBCASE("no loops and sizes drop by 2 vertices, 3 edges")
    {
        for (const char* tag : {"Petersen", "K4", "B3", "Gstar5", "K3,3"}) {
            const MultiGraph g = gen_named(tag);
            std::array<VertexId, 3> t{};
            if (!find_triangle(g, t))
                continue;
            const Contraction c = contract_triangle(g, t);
            CHECK(c.graph.num_vertices() == g.num_vertices() - 2);
            CHECK(c.graph.num_edges() == g.num_edges() - 3);
            for (const Endpoints& e : c.graph.edges())
                CHECK(e.u != e.v);
        }
    }
}

TEST_CASE("match_small_pattern")
{
    const MultiGraph g3_a = build_graph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}}, false);
    const MultiGraph g3_b = build_graph(3, {{2, 0}, {1, 2}, {1, 2}, {0, 1}}, false);
    CHECK(match_small_pattern(g3_a, "G3"));
    CHECK(match_small_pattern(g3_b, "G3"));
    CHECK(!match_small_pattern(gen_named("B3"), "Gstar5"));
    CHECK(match_small_pattern(complete_graph(7), "K7"));
    CHECK(!match_small_pattern(complete_graph(6), "K7"));
    CHECK(code_of([] { match_small_pattern(complete_graph(3), "Q9"); }) == Errc::UnknownPattern);
}

TEST_CASE("pattern matching ignores vertex labels")
{
    Rng rng(99);
    for (const char* tag : {"G3", "B3", "Gstar5", "K5", "K7"}) {
        const MultiGraph g = pattern_graph(tag);
        for (int round = 0; round < 10; ++round) {
            std::vector<int> perm(g.num_vertices());
            std::iota(perm.begin(), perm.end(), 0);
            for (int i = static_cast<int>(perm.size()) - 1; i > 0; --i)
                std::swap(perm[i], perm[rng.below(i + 1)]);
            const MultiGraph h = relabel(g, perm);
            CHECK(match_small_pattern(h, tag));
            const auto iso = find_isomorphism(g, h);
            REQUIRE(iso.has_value());
            for (const Endpoints& e : g.edges())
                CHECK(h.multiplicity((*iso)[e.u], (*iso)[e.v]) == g.multiplicity(e.u, e.v));
        }
    }
}

TEST_CASE("Rational")
{
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational::infinity().str() == "inf");
    CHECK(Rational(13, 15) < Rational(7, 8));
    CHECK(Rational(100, 1) < Rational::infinity());
    CHECK(min(Rational::infinity(), Rational(9, 11)) == Rational(9, 11));
    CHECK(Rational(13, 15).ceil_times(15) == 13);
    CHECK(Rational(13, 15).ceil_times(7) == 7);
    CHECK(Rational(7, 9).ceil_times(9) == 7);
    CHECK(Rational(7, 9).ceil_times(10) == 8);
    CHECK(parse_rational("19/22") == Rational(19, 22));
    CHECK(parse_rational("inf").is_infinite());
    CHECK(parse_rational("2") == Rational(2));
}
