#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "kecs/error.hpp"
#include "kecs/generators.hpp"
#include "kecs/io.hpp"
#include "kecs/oracle.hpp"

using namespace kecs;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = cli::run_command(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

Errc parse_error(const std::string& text, std::string* message = nullptr)
{
    try {
        parse_graph_string(text);
    } catch (const Error& e) {
        if (message)
            *message = e.what();
        return e.code();
    }
    FAIL("graph parsed without error");
    return Errc::InvariantViolated;
}

fs::path scratch_dir()
{
    const fs::path dir = fs::temp_directory_path() / "kecs_unit_io";
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& p, const std::string& text)
{
    std::ofstream f(p);
    f << text;
}

} // namespace

TEST_CASE("graph format parses and reports line numbers")
{
    const MultiGraph g = parse_graph_string("# triangle\np ecs 3 3\ne 0 1\n\ne 1 2\ne 2 0\n");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    CHECK(g.simple());

    const MultiGraph mg = parse_graph_string("p ecs 2 2 multi\ne 0 1\ne 1 0\n");
    CHECK(mg.num_edges() == 2);
    CHECK(mg.has_parallel_edges());

    std::string msg;
    CHECK(parse_error("p ecs 3 1\ne 0 x\n", &msg) == Errc::SyntaxError);
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(parse_error("p ecs 3 1 weird\ne 0 1\n") == Errc::SyntaxError);
    CHECK(parse_error("e 0 1\n") == Errc::SyntaxError);
    CHECK(parse_error("p ecs 3 2\ne 0 1\n") == Errc::CountMismatch);
    CHECK(parse_error("p ecs 3 1\ne 1 1\n") == Errc::LoopEdge);
    CHECK(parse_error("p ecs 3 1\ne 0 3\n") == Errc::IndexOutOfRange);
    CHECK(parse_error("p ecs 3 4 simple\ne 0 1\ne 0 1\ne 0 2\ne 1 2\n") == Errc::DuplicateEdgeInSimpleMode);
}

TEST_CASE("graph and coloring round trips")
{
    for (const char* tag : {"G3", "Petersen", "K5", "DoubledC5", "B(5)"}) {
        CAPTURE(tag);
        const MultiGraph g = gen_named(tag);
        std::ostringstream s;
        write_graph(s, g);
        const MultiGraph back = parse_graph_string(s.str());
        CHECK(back.num_vertices() == g.num_vertices());
        CHECK(back.edges() == g.edges());
        CHECK(back.simple() == !g.has_parallel_edges());

        const int k = g.max_degree();
        const OracleResult opt = exact_max_ecs(g, k);
        const PartialColoring c = PartialColoring::from_colors(g, k, opt.witness);
        std::ostringstream cs;
        write_coloring(cs, c);
        std::istringstream cin(cs.str());
        const ColoringFile cf = parse_coloring(cin);
        CHECK(cf.edges == g.num_edges());
        CHECK(cf.palette == k);
        CHECK(cf.colors == opt.witness);
    }
}

TEST_CASE("cli: generate, solve, oracle")
{
    const Run gen = run({"gen", "--named", "petersen"});
    REQUIRE(gen.code == 0);
    const Run sub = run({"solve", "--strategy", "subcubic"}, gen.out);
    CHECK(sub.code == 0);
    int colored = 0;
    REQUIRE(std::sscanf(sub.out.c_str(), "subcubic k=3: colored %d", &colored) == 1);
    CHECK(colored >= 13);
    CHECK(sub.out.find("promised 13") != std::string::npos);

    const Run k5 = run({"gen", "--named", "K5"});
    CHECK(run({"oracle"}, k5.out).out == "8\n");
    CHECK(run({"gamma"}, k5.out).out == "4/5\n");

    const Run meta = run({"solve", "--strategy", "meta", "--family", "K5", "-k", "4", "--json", "-"}, k5.out);
    CHECK(meta.code == 0);
    const auto j = nlohmann::json::parse(meta.out);
    CHECK(j["schema"] == cli::kReportSchema);
    CHECK(j["oracle_optimum"] == 8);
    CHECK(j["colored"].get<int>() >= Rational(9, 11).ceil_times(8));
    CHECK(j["guarantee_basis"] == "optimum");
    CHECK(j["fraction"].get<std::string>().find('/') != std::string::npos);
}

TEST_CASE("cli: json reports are byte-reproducible")
{
    const Run gen = run({"gen", "--random", "--n", "14", "--delta", "5", "--seed", "9"});
    REQUIRE(gen.code == 0);
    for (const char* strategy : {"psi", "meta", "vizing-baseline"}) {
        CAPTURE(strategy);
        const Run a = run({"solve", "--strategy", strategy, "--json", "-"}, gen.out);
        const Run b = run({"solve", "--strategy", strategy, "--json", "-"}, gen.out);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(nlohmann::json::parse(a.out).contains("wall_time_ms") == false);
    }
    CHECK(run({"gen", "--random", "--n", "14", "--delta", "5", "--seed", "9"}).out == gen.out);
}

TEST_CASE("cli: every strategy's coloring passes verify")
{
    const fs::path dir = scratch_dir();
    struct Case {
        const char* tag;
        std::vector<std::string> strategies;
    };
    for (const Case& c : {Case{"Petersen", {"psi", "subcubic", "meta", "vizing-baseline"}},
                          Case{"TwoG3Bridge", {"psi", "subcubic", "meta"}},
                          Case{"K7", {"psi", "meta", "vizing-baseline"}},
                          Case{"B(5)", {"psi", "meta", "vizing-baseline"}}}) {
        const fs::path graph = dir / (std::string(c.tag) + ".ecs");
        REQUIRE(run({"gen", "--named", c.tag, "-o", graph.string()}).code == 0);
        for (const std::string& s : c.strategies) {
            CAPTURE(c.tag);
            CAPTURE(s);
            const fs::path col = dir / (std::string(c.tag) + "." + s + ".col");
            const Run solve = run({"solve", graph.string(), "--strategy", s, "-o", col.string()});
            CHECK(solve.code == 0);
            const Run v = run({"verify", graph.string(), col.string()});
            CHECK(v.code == 0);
            CHECK(v.out.rfind("ok: ", 0) == 0);
        }
    }
}

TEST_CASE("cli: verify rejects bad colorings")
{
    const fs::path dir = scratch_dir();
    const fs::path graph = dir / "path.ecs";
    write_file(graph, "p ecs 3 2\ne 0 1\ne 1 2\n");
    const fs::path good = dir / "good.col";
    write_file(good, "s ecs 2 2\nc 0 1\nc 1 2\n");
    const fs::path clash = dir / "clash.col";
    write_file(clash, "s ecs 2 2\nc 0 1\nc 1 1\n");
    const fs::path short_col = dir / "short.col";
    write_file(short_col, "s ecs 1 2\nc 0 1\n");

    const Run ok = run({"verify", graph.string(), good.string()});
    CHECK(ok.code == 0);
    CHECK(ok.out == "ok: 2 of 2 edges properly colored with 2 colors\n");
    CHECK(run({"verify", graph.string(), clash.string()}).code == 1);
    CHECK(run({"verify", graph.string(), short_col.string()}).code == 1);
    CHECK(run({"verify", graph.string(), good.string(), "-k", "1"}).code == 1);
}

TEST_CASE("cli: errors exit with status 1")
{
    CHECK(run({"solve"}, "p ecs 2 1\ne 0 0\n").code == 1);
    CHECK(run({"solve", "--strategy", "nope"}, "p ecs 2 1\ne 0 1\n").code == 1);
    CHECK(run({"solve", "--strategy", "psi", "-k", "2"}, run({"gen", "--named", "K5"}).out).code == 1);
    CHECK(run({"gen", "--named", "nonsense"}).code == 1);
    CHECK(run({"gen"}).code == 1);
    CHECK(run({"oracle", "--cap", "5"}, run({"gen", "--named", "petersen"}).out).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    const Run e = run({"solve", "/nonexistent/graph.ecs"});
    CHECK(e.code == 1);
    CHECK(e.err.find("error:") != std::string::npos);
}
