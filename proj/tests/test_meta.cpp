#include <doctest.h>

#include <algorithm>
#include <functional>

#include "helpers.hpp"
#include "kecs/error.hpp"
#include "kecs/factor.hpp"
#include "kecs/generators.hpp"
#include "kecs/meta.hpp"
#include "kecs/oracle.hpp"
#include "kecs/patterns.hpp"

using namespace kecs;

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

std::vector<EdgeId> all_edges(const MultiGraph& g)
{
    std::vector<EdgeId> out(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        out[e] = e;
    return out;
}

MultiGraph hub_instance(int arms)
{
    std::vector<std::pair<int, int>> es;
    int n = 1;
    for (int c = 0; c < arms; ++c) {
        const int a = n, b = n + 1, apex = n + 2;
        n += 3;
        es.insert(es.end(), {{a, b}, {a, b}, {a, apex}, {b, apex}, {0, apex}});
    }
    return build_graph(n, es, false);
}

void check_log(const MultiGraph& g, const MetaResult& r, const ExceptionFamily& fam)
{
    CHECK(validate_coloring(g, r.coloring));
    CHECK(r.log.colored == r.coloring.colored_count());
    CHECK(r.log.forest.is_star_forest());
    const FamilyConstants fc = family_constants(fam);
    for (const MetaGroup& grp : r.log.groups) {
        REQUIRE(grp.removed > 0);
        const Rational ratio(grp.colored, grp.removed);
        if (grp.kind == MetaGroup::Kind::Bridge)
            CHECK(ratio >= fc.beta);
        else
            CHECK(ratio >= fc.gamma);
    }
}

} // namespace

TEST_CASE("family constants")
{
    const FamilyConstants g3 = family_constants(named_family("G3"));
    CHECK(g3.beta == Rational(7, 9));
    CHECK(g3.gamma == Rational(4, 5));
    const FamilyConstants b3 = family_constants(named_family("B3"));
    CHECK(b3.beta == Rational(13, 15));
    CHECK(b3.gamma == Rational(7, 8));
    const FamilyConstants k5 = family_constants(named_family("K5"));
    CHECK(k5.beta.is_infinite());
    CHECK(k5.gamma == Rational(9, 11));
    const FamilyConstants k7 = family_constants(named_family("K7"));
    CHECK(k7.beta.is_infinite());
    CHECK(k7.gamma == Rational(19, 22));
}

TEST_CASE("family tables")
{
    const ExceptionFamily fam = named_family("B3");
    REQUIRE(fam.members.size() == 1);
    const FamilyMember& b3 = fam.members[0];
    CHECK(b3.optimum == 6);
    CHECK(!b3.regular);
    CHECK(test::count_colored(b3.witness) == 6);
    REQUIRE(b3.optimum_without.size() == 7);
    for (EdgeId e = 0; e < 7; ++e) {
        CHECK(b3.optimum_without[e] == 6);
        CHECK(b3.witness_without[e][e] == kUncolored);
        CHECK(test::count_colored(b3.witness_without[e]) == 6);
        CHECK(validate_assignment(b3.graph, 3, b3.witness_without[e]));
    }
    CHECK(named_family("K5").members[0].regular);
}

TEST_CASE("families that are not k-normal are rejected")
{
    // K4 - e is 3-colorable, so dropping an edge keeps c_3 at 5 < 6.
    CHECK(code_of([] { make_family(3, {"K4"}); }) == Errc::NotKNormal);
    CHECK(code_of([] { make_family(4, {"G3"}); }) == Errc::NotKNormal);
    CHECK(code_of([] { family_constants(ExceptionFamily{3, {}}); }) == Errc::NotKNormal);
    CHECK(code_of([] { named_family("K9"); }) == Errc::UnknownPattern);
}

TEST_CASE("core ratios")
{
    CHECK(core_ratio(3, false) == Rational(7, 9));
    CHECK(core_ratio(3, true) == Rational(13, 15));
    CHECK(core_ratio(4, true) == Rational(5, 6));
    CHECK(core_ratio(5, true) == Rational(23, 27));
    CHECK(core_ratio(6, true) == Rational(19, 22));
    CHECK(core_ratio(7, true) == Rational(22, 25));
    CHECK(code_of([] { core_ratio(8, true); }) == Errc::UnsupportedDelta);
}

TEST_CASE("detect_exceptions")
{
    const ExceptionFamily g3 = named_family("G3");
    const MultiGraph two = build_graph(6, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 4}, {3, 5}, {4, 5}}, false);
    CHECK(detect_exceptions(two, all_edges(two), g3).size() == 2);

    const ExceptionFamily b3 = named_family("B3");
    const MultiGraph petersen = make_petersen();
    CHECK(detect_exceptions(petersen, all_edges(petersen), b3).empty());

    // B3 on 0..4 next to a K4 on 5..8.
    std::vector<std::pair<int, int>> pairs;
    const MultiGraph b3_graph = gen_named("B3");
    const MultiGraph k4 = complete_graph(4);
    for (const Endpoints& e : b3_graph.edges())
        pairs.emplace_back(e.u, e.v);
    for (const Endpoints& e : k4.edges())
        pairs.emplace_back(e.u + 5, e.v + 5);
    const MultiGraph both = build_graph(9, pairs, true);
    const auto found = detect_exceptions(both, all_edges(both), b3);
    REQUIRE(found.size() == 1);
    CHECK(found[0].vertices == std::vector<VertexId>{0, 1, 2, 3, 4});
    CHECK(found[0].edges.size() == 7);
}

TEST_CASE("normalize_F")
{
    const ExceptionFamily fam = named_family("G3");
    SUBCASE("nothing to do without family components")
    {
        const MultiGraph g = make_petersen();
        std::vector<EdgeId> f = all_edges(g);
        CHECK(normalize_F(g, f, fam) == 0);
        CHECK(f == all_edges(g));
    }
    SUBCASE("a G3 next to an uncovered vertex is broken up")
    {
        const MultiGraph g = build_graph(8, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}}, false);
        std::vector<EdgeId> f{0, 1, 2, 3, 5, 6, 7};
        CHECK(normalize_F(g, f, fam) == 1);
        CHECK(f.size() == 7);
        CHECK(std::find(f.begin(), f.end(), 4) != f.end());
        CHECK(detect_exceptions(g, f, fam).empty());
    }
    SUBCASE("saturated neighbors leave F alone")
    {
        // Apex 2 joined to 3, which already has three F edges to 4, 5, 6.
        const MultiGraph g =
            build_graph(7, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {3, 6}}, false);
        std::vector<EdgeId> f{0, 1, 2, 3, 5, 6, 7};
        CHECK(normalize_F(g, f, fam) == 0);
        CHECK(detect_exceptions(g, f, fam).size() == 1);
    }
}

TEST_CASE("star forest")
{
    const MultiGraph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, true);
    std::vector<bool> in_f{true, false, true, false};
    std::vector<bool> in_r{false, true, false, false};
    const StarForest sf = star_forest(g, in_f, in_r);
    CHECK(sf.components == 2);
    CHECK(sf.links.size() == 1);
    CHECK(sf.is_star_forest());
    CHECK(sf.component_of_vertex[4] == -1);
}

TEST_CASE("run_meta on small instances")
{
    SUBCASE("G3 alone uses the exact table")
    {
        const ExceptionFamily fam = named_family("G3");
        const MultiGraph g = gen_named("G3");
        const MetaResult r = run_meta(g, 3, &fam);
        CHECK(r.coloring.colored_count() == 3);
        CHECK(r.log.gamma.size() == 1);
        CHECK(r.log.exact_components == 1);
        check_log(g, r, fam);
    }
    SUBCASE("no family components: core on the k-matching")
    {
        const MultiGraph g = make_petersen();
        const MetaResult r = run_meta(g, 3, nullptr);
        CHECK(r.log.gamma.empty());
        CHECK(r.log.core_edges == r.log.f_size);
        CHECK(r.coloring.colored_count() >= 13);
    }
    SUBCASE("G3 hanging off K3,3")
    {
        const ExceptionFamily fam = named_family("G3");
        std::vector<std::pair<int, int>> pairs;
        const MultiGraph k33 = gen_named("K3,3");
        for (const Endpoints& e : k33.edges())
            pairs.emplace_back(e.u, e.v);
        pairs.insert(pairs.end(), {{6, 7}, {6, 7}, {6, 8}, {7, 8}, {8, 0}});
        const MultiGraph g = build_graph(9, pairs, false);
        REQUIRE(g.num_edges() == 14);
        const MetaResult r = run_meta(g, 3, &fam);
        check_log(g, r, fam);
        CHECK(r.coloring.colored_count() >= Rational(7, 9).ceil_times(exact_max_ecs(g, 3).optimum));
    }
    SUBCASE("hub instances exercise the bridge step")
    {
        const ExceptionFamily fam = named_family("G3");
        for (int arms : {4, 5}) {
            const MultiGraph g = hub_instance(arms);
            const MetaResult r = run_meta(g, 3, &fam);
            check_log(g, r, fam);
            const bool bridge = std::any_of(r.log.groups.begin(), r.log.groups.end(),
                                            [](const MetaGroup& grp) { return grp.kind == MetaGroup::Kind::Bridge; });
            CHECK(bridge);
            CHECK(r.coloring.colored_count() >= Rational(7, 9).ceil_times(exact_max_ecs(g, 3).optimum));
        }
    }
    SUBCASE("errors")
    {
        const ExceptionFamily k5 = named_family("K5");
        CHECK(code_of([&] { run_meta(gen_named("G3"), 4, nullptr); }) == Errc::NotSimple);
        CHECK(code_of([&] { run_meta(make_petersen(), 8, nullptr); }) == Errc::UnsupportedDelta);
        CHECK(code_of([&] { run_meta(make_petersen(), 3, &k5); }) == Errc::PaletteMismatch);
    }
}

TEST_CASE("run_meta on linked family instances")
{
    struct Config {
        const char* family;
        int k;
        int link_degree;
        bool multi;
        int max_edges;
    };
    for (const Config& cfg : {Config{"G3", 3, 4, true, 18}, Config{"B3", 3, 4, false, 16},
                              Config{"K5", 4, 5, false, 16}, Config{"K7", 6, 7, false, 25}}) {
        const ExceptionFamily fam = named_family(cfg.family);
        const FamilyConstants fc = family_constants(fam);
        const Rational ratio = min(core_ratio(cfg.k, !cfg.multi), min(fc.beta, fc.gamma));
        int checked = 0;
        for (std::uint64_t seed = 500; checked < 25 && seed < 5000; ++seed) {
            LinkedPatternParams p;
            p.pattern = cfg.family;
            p.copies = cfg.multi ? 1 + static_cast<int>(seed % 3) : 1;
            p.extra_vertices = static_cast<int>(seed % 5);
            p.links = 1 + static_cast<int>(seed % 6);
            p.max_degree = cfg.link_degree;
            p.seed = seed;
            p.multi = cfg.multi;
            const MultiGraph g = gen_linked_patterns(p);
            if (g.num_edges() > cfg.max_edges)
                continue;
            ++checked;
            const MetaResult r = run_meta(g, cfg.k, &fam);
            check_log(g, r, fam);
            const OracleResult opt = exact_max_ecs(g, cfg.k);
            CHECK(r.coloring.colored_count() >= ratio.ceil_times(opt.optimum));
            CHECK(r.coloring.colored_count() <= opt.optimum);

            // R touches at least as much deficit as the leaving edges of an optimal coloring.
            std::vector<ExceptionComponent> gamma;
            for (const GammaEntry& ge : r.log.gamma) {
                const FamilyMember& m = fam.members[ge.member];
                gamma.push_back({ge.vertices, m.graph.num_edges() - m.optimum});
            }
            std::vector<int> comp_of(g.num_vertices(), -1);
            for (int q = 0; q < static_cast<int>(gamma.size()); ++q)
                for (VertexId v : gamma[q].vertices)
                    comp_of[v] = q;
            std::vector<EdgeId> opt_leaving;
            for (EdgeId e = 0; e < g.num_edges(); ++e) {
                const Endpoints ends = g.endpoints(e);
                if (opt.witness[e] != kUncolored && comp_of[ends.u] != comp_of[ends.v] &&
                    (comp_of[ends.u] >= 0 || comp_of[ends.v] >= 0))
                    opt_leaving.push_back(e);
            }
            CHECK(touched_deficit(g, r.log.r, gamma) >= touched_deficit(g, opt_leaving, gamma));
        }
        CHECK(checked == 25);
    }
}

TEST_CASE("core_color")
{
    const MultiGraph petersen = make_petersen();
    const auto colors = core_color(petersen, 3);
    CHECK(validate_assignment(petersen, 3, colors));
    CHECK(test::count_colored(colors) >= 13);
    const MultiGraph k6 = complete_graph(6);
    const auto k6_colors = core_color(k6, 6);
    CHECK(test::count_colored(k6_colors) == 15);
}
