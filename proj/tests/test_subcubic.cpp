#include <doctest.h>

#include "kecs/decompose.hpp"
#include "kecs/error.hpp"
#include "kecs/generators.hpp"
#include "kecs/oracle.hpp"
#include "kecs/patterns.hpp"
#include "kecs/subcubic.hpp"

using namespace kecs;

namespace {

int solved(const MultiGraph& g)
{
    const PartialColoring c = solve_subcubic(g);
    CHECK(validate_coloring(g, c));
    CHECK(c.palette() == 3);
    return c.colored_count();
}

// K3,3 with vertex 0 replaced by a triangle: biconnected, subcubic, 12 edges,
// and contracting the triangle gives back the triangle-free K3,3.
MultiGraph truncated_k33()
{
    // K3,3 sides {0,1,2} and {3,4,5}; vertex 0 becomes 0,6,7 joined to 3,4,5.
    return build_graph(8,
                       {{0, 6}, {6, 7}, {7, 0}, {0, 3}, {6, 4}, {7, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}},
                       true);
}

} // namespace

TEST_CASE("named subcubic instances")
{
    CHECK(solved(gen_named("G3")) == 3);
    CHECK(solved(gen_named("B3")) == 6);
    CHECK(solved(gen_named("Gstar5")) == 6);
    CHECK(solved(make_two_g3_bridge()) == 7);
    CHECK(solved(make_petersen()) >= 13);
    CHECK(solved(complete_graph(4)) == 6);
    CHECK(solved(gen_named("K3,3")) == 9);
}

TEST_CASE("the doubled 5-cycle misses 13/15 even at its optimum")
{
    const MultiGraph g = make_doubled_c5();
    CHECK(g.num_vertices() == 5);
    CHECK(g.num_edges() == 7);
    CHECK(g.max_degree() == 3);
    std::array<VertexId, 3> t{};
    CHECK(!find_triangle(g, t));
    CHECK(!contains_g3(g));
    CHECK(decompose(g).cut_vertices.empty());
    CHECK(decompose(g).bridges.empty());
    CHECK(!match_small_pattern(g, "B3"));
    CHECK(!match_small_pattern(g, "Gstar5"));
    CHECK(exact_max_ecs(g, 3).optimum == 6);
    CHECK(Rational(13, 15).ceil_times(7) == 7);
    CHECK(solved(g) == 6);
    CHECK(subcubic_promise(g) == 6);
}

TEST_CASE("classify_subcubic")
{
    CHECK(classify_subcubic(gen_named("G3")) == SubcubicCase::G3);
    CHECK(classify_subcubic(gen_named("B3")) == SubcubicCase::B3);
    CHECK(classify_subcubic(gen_named("Gstar5")) == SubcubicCase::Gstar5);
    CHECK(classify_subcubic(make_petersen()) == SubcubicCase::TriangleFreeCore);
    CHECK(classify_subcubic(truncated_k33()) == SubcubicCase::HasTriangle);
    CHECK(classify_subcubic(complete_graph(4)) == SubcubicCase::Small);
    CHECK(case_name(SubcubicCase::TriangleFreeCore) == "triangle-free");
}

TEST_CASE("solve_biconnected")
{
    CHECK(solve_biconnected(complete_graph(4)).colored_count() == 6);
    for (const char* tag : {"B3TrianglePreimage(1)", "B3TrianglePreimage(2)", "B3TrianglePreimage(3)",
                            "Gstar5TrianglePreimage(1)", "Gstar5TrianglePreimage(2)", "Gstar5TrianglePreimage(3)"}) {
        const MultiGraph g = gen_named(tag);
        CHECK(g.num_edges() == 10);
        CHECK(solve_biconnected(g).colored_count() == 9);
    }
    const MultiGraph t = truncated_k33();
    const int got = solve_biconnected(t).colored_count();
    CHECK(got >= Rational(13, 15).ceil_times(9) + 3);
    CHECK(got <= exact_max_ecs(t, 3).optimum);

    CHECK_THROWS_AS(solve_biconnected(gen_named("G3")), Error);
    CHECK_THROWS_AS(solve_biconnected(make_two_g3_bridge()), Error);
}

TEST_CASE("triangle_free_core")
{
    CHECK(triangle_free_core(gen_named("C5")).colored_count() == 5);
    CHECK(triangle_free_core(make_petersen()).colored_count() == 13);
    CHECK(triangle_free_core(gen_named("K3,3")).colored_count() == 9);
}

TEST_CASE("degree above three is rejected")
{
    try {
        solve_subcubic(complete_graph(5));
        FAIL("expected DegreeTooHigh");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DegreeTooHigh);
    }
}

TEST_CASE("subcubic_promise")
{
    CHECK(subcubic_promise(gen_named("G3")) == 3);
    CHECK(subcubic_promise(gen_named("B3")) == 6);
    CHECK(subcubic_promise(gen_named("Gstar5")) == 6);
    CHECK(subcubic_promise(make_two_g3_bridge()) == 7);
    CHECK(subcubic_promise(make_petersen()) == 13);
    CHECK(contains_g3(make_two_g3_bridge()));
    CHECK(!contains_g3(make_petersen()));
}

TEST_CASE("random subcubic multigraphs: promise met, never above the optimum")
{
    for (std::uint64_t s = 1; s <= 150; ++s) {
        RandomGraphParams p;
        p.n = 3 + static_cast<int>(s % 12);
        p.max_degree = 3;
        p.density = 0.5 + 0.005 * static_cast<double>(s % 100);
        p.seed = 1000 + s;
        p.multi = s % 3 != 0;
        const MultiGraph g = gen_random_bounded_degree(p);
        SubcubicStats stats;
        const PartialColoring c = solve_subcubic(g, &stats);
        CHECK(validate_coloring(g, c));
        CHECK(c.colored_count() >= subcubic_promise(g));
        if (g.num_edges() <= 22)
            CHECK(c.colored_count() <= exact_max_ecs(g, 3).optimum);
    }
}
