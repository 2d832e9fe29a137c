#include <doctest.h>

#include <algorithm>
#include <queue>

#include "helpers.hpp"
#include "kecs/error.hpp"
#include "kecs/factor.hpp"
#include "kecs/generators.hpp"
#include "kecs/oracle.hpp"
#include "kecs/patterns.hpp"
#include "kecs/psi_engine.hpp"
#include "kecs/vizing.hpp"

using namespace kecs;

namespace {

template <class F>
Errc code_of(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no kecs::Error thrown");
    return Errc::InvariantViolated;
}

// Shortest cycle through edge e: distance between its ends without e, plus one.
int girth(const MultiGraph& g)
{
    int best = 1 << 20;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Endpoints ends = g.endpoints(e);
        std::vector<int> dist(g.num_vertices(), -1);
        std::queue<VertexId> q;
        dist[ends.u] = 0;
        q.push(ends.u);
        while (!q.empty()) {
            const VertexId x = q.front();
            q.pop();
            for (EdgeId f = 0; f < g.num_edges(); ++f) {
                if (f == e || !g.endpoints(f).has(x))
                    continue;
                const VertexId y = g.endpoints(f).u == x ? g.endpoints(f).v : g.endpoints(f).u;
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    q.push(y);
                }
            }
        }
        if (dist[ends.v] >= 0)
            best = std::min(best, dist[ends.v] + 1);
    }
    return best;
}

} // namespace

TEST_CASE("oracle on named graphs")
{
    CHECK(exact_max_ecs(gen_named("G3"), 3).optimum == 3);
    CHECK(exact_max_ecs(gen_named("B3"), 3).optimum == 6);
    CHECK(exact_max_ecs(gen_named("Gstar5"), 3).optimum == 6);
    CHECK(exact_max_ecs(complete_graph(5), 4).optimum == 8);
    CHECK(exact_max_ecs(complete_graph(7), 6).optimum == 18);
    CHECK(exact_max_ecs(complete_graph(4), 3).optimum == 6);
    CHECK(gamma_k(make_petersen(), 3) == Rational(13, 15));
    CHECK(gamma_k(gen_named("K5-e"), 4) == Rational(8, 9));
    CHECK(gamma_k(make_b_delta(5), 5) == Rational(15, 17));
    CHECK(gamma_k(build_graph(3, {}, true), 2) == Rational(1));
}

TEST_CASE("oracle refuses large instances")
{
    CHECK(code_of([] { exact_max_ecs(make_petersen(), 3, 10); }) == Errc::InstanceTooLarge);
    CHECK(exact_max_ecs(make_petersen(), 3, 15).optimum == 13);
}

TEST_CASE("oracle witness, determinism and bounds")
{
    for (std::uint64_t s = 1; s <= 80; ++s) {
        RandomGraphParams p;
        p.n = 4 + static_cast<int>(s % 7);
        p.max_degree = 3 + static_cast<int>(s % 3);
        p.density = 0.5 + 0.006 * static_cast<double>(s % 80);
        p.seed = 500 + s;
        p.multi = p.max_degree == 3 && s % 2 == 0;
        const MultiGraph g = gen_random_bounded_degree(p);
        if (g.num_edges() > 20)
            continue;
        const int d = g.max_degree();
        const OracleResult a = exact_max_ecs(g, d);
        const OracleResult b = exact_max_ecs(g, d);
        CHECK(a.optimum == b.optimum);
        CHECK(a.nodes == b.nodes);
        CHECK(a.witness == b.witness);
        CHECK(validate_assignment(g, d, a.witness));
        CHECK(test::count_colored(a.witness) == a.optimum);
        CHECK(a.gamma == Rational(a.optimum, g.num_edges()));
        CHECK(a.optimum >= maximize_psi(g).colored_count());
        CHECK(a.optimum <= static_cast<int>(max_k_matching(g, d).size()));
        if (g.simple())
            CHECK(a.optimum >= vizing_baseline(g, d).colored_count());
        for (int k = 1; k < d; ++k)
            CHECK(exact_max_ecs(g, k).optimum <= a.optimum);
    }
}

TEST_CASE("named generator sizes")
{
    struct Size {
        const char* tag;
        int n, m;
    };
    for (const Size& s : {Size{"G3", 3, 4}, Size{"B3", 5, 7}, Size{"Gstar5", 5, 7}, Size{"Petersen", 10, 15},
                          Size{"K5", 5, 10}, Size{"K7", 7, 21}, Size{"K5-e", 5, 9}, Size{"C7", 7, 7},
                          Size{"K3,3", 6, 9}, Size{"B(5)", 7, 17}, Size{"B(7)", 9, 31}, Size{"TwoG3Bridge", 6, 9},
                          Size{"DoubledC5", 5, 7}}) {
        CAPTURE(s.tag);
        const MultiGraph g = gen_named(s.tag);
        CHECK(g.num_vertices() == s.n);
        CHECK(g.num_edges() == s.m);
    }
    CHECK(gen_named("petersen").num_edges() == 15);
    CHECK(girth(make_petersen()) == 5);
    CHECK(make_petersen().max_degree() == 3);
    CHECK(make_b_delta(5).max_degree() == 5);
    CHECK(make_b_delta(7).max_degree() == 7);
    CHECK(isomorphic(make_b_delta(3), gen_named("B3")));
    CHECK(isomorphic(gen_named("G3"), pattern_graph("G3")));
}

TEST_CASE("generator errors")
{
    CHECK(code_of([] { gen_named("K9000x"); }) == Errc::BadTag);
    CHECK(code_of([] { gen_named("nonsense"); }) == Errc::BadTag);
    CHECK(code_of([] { gen_named("B3TrianglePreimage(4)"); }) == Errc::BadTag);
    CHECK(code_of([] { make_b_delta(4); }) == Errc::EvenDelta);
    CHECK(code_of([] { gen_named("B(6)"); }) == Errc::EvenDelta);
    CHECK(code_of([] { gen_random_bounded_degree(1, 3, 1.0, 1); }) == Errc::UnsatisfiableParameters);
    CHECK(code_of([] { gen_random_bounded_degree(5, 1, 1.0, 1); }) == Errc::UnsatisfiableParameters);
    CHECK(code_of([] { gen_random_bounded_degree(5, 3, 1.5, 1); }) == Errc::UnsatisfiableParameters);
}

TEST_CASE("random bounded-degree graphs")
{
    const MultiGraph single = gen_random_bounded_degree(2, 1, 1.0, 1);
    CHECK(single.num_vertices() == 2);
    CHECK(single.num_edges() == 1);

    for (std::uint64_t s = 0; s < 200; ++s) {
        RandomGraphParams p;
        p.n = 2 + static_cast<int>(s % 30);
        p.max_degree = 2 + static_cast<int>(s % 6);
        p.density = 0.01 * static_cast<double>(s % 101);
        p.seed = s;
        p.multi = s % 4 == 0;
        const MultiGraph g = gen_random_bounded_degree(p);
        CHECK(g.num_vertices() == p.n);
        CHECK(g.max_degree() <= p.max_degree);
        CHECK(test::count_components(g) == 1);
        CHECK(g.num_edges() >= p.n - 1);
        CHECK(g.num_edges() <= p.n * p.max_degree / 2);
        if (!p.multi)
            CHECK(!g.has_parallel_edges());
        const MultiGraph again = gen_random_bounded_degree(p);
        CHECK(again.edges() == g.edges());
    }
}

TEST_CASE("linked patterns contain their copies")
{
    for (std::uint64_t s = 1; s <= 40; ++s) {
        LinkedPatternParams p;
        p.pattern = s % 2 == 0 ? "G3" : "K5";
        p.copies = 1 + static_cast<int>(s % 3);
        p.extra_vertices = static_cast<int>(s % 4);
        p.links = static_cast<int>(s % 6);
        p.seed = s;
        const MultiGraph g = gen_linked_patterns(p);
        const MultiGraph pat = pattern_graph(p.pattern);
        CHECK(g.num_vertices() == p.copies * pat.num_vertices() + p.extra_vertices);
        CHECK(g.num_edges() >= p.copies * pat.num_edges());
        CHECK(g.num_edges() <= p.copies * pat.num_edges() + p.links);
        for (int c = 0; c < p.copies; ++c) {
            std::vector<VertexId> block;
            for (int i = 0; i < pat.num_vertices(); ++i)
                block.push_back(c * pat.num_vertices() + i);
            CHECK(static_cast<int>(test::edges_within(g, block).size()) >= pat.num_edges());
        }
        CHECK(gen_linked_patterns(p).edges() == g.edges());
    }
}
