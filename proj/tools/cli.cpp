#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "kecs/decompose.hpp"
#include "kecs/error.hpp"
#include "kecs/generators.hpp"
#include "kecs/io.hpp"
#include "kecs/meta.hpp"
#include "kecs/oracle.hpp"
#include "kecs/psi_engine.hpp"
#include "kecs/subcubic.hpp"
#include "kecs/vizing.hpp"

namespace kecs::cli {

namespace {

constexpr int kSolveOracleCap = 20;

using json = nlohmann::json;

std::optional<std::string> rational_or_null(const std::optional<Rational>& r)
{
    if (!r)
        return std::nullopt;
    return r->str();
}

template <class T>
json or_null(const std::optional<T>& v)
{
    return v ? json(*v) : json(nullptr);
}

Rational fraction_of(int colored, int m)
{
    return m == 0 ? Rational(1) : Rational(colored, m);
}

MultiGraph read_graph_arg(const std::string& path, std::istream& in)
{
    if (path.empty() || path == "-")
        return parse_graph(in);
    return parse_graph_file(path);
}

// Writes to `path`, or to `out` for "-".
void write_to(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body)
{
    if (path == "-") {
        body(out);
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw Error(Errc::SyntaxError, "cannot write '" + path + "'");
    body(file);
}

const ExceptionFamily* family_or_null(const std::string& name, std::optional<ExceptionFamily>& storage)
{
    if (name == "none")
        return nullptr;
    storage = named_family(name);
    return &*storage;
}

Rational meta_ratio(int k, bool simple, const ExceptionFamily* fam)
{
    Rational r = core_ratio(k, simple);
    if (fam) {
        const FamilyConstants fc = family_constants(*fam);
        r = min(r, min(fc.beta, fc.gamma));
    }
    return r;
}

struct PsiPromise {
    std::optional<Rational> fraction;
    std::optional<int> edges;
};

// Per component: Delta/(Delta+1) on the excluded graphs and at Delta = 3,
// the Delta-specific bound elsewhere. Multigraphs above Delta = 3 get none.
PsiPromise psi_promise(const MultiGraph& g)
{
    const int delta = g.max_degree();
    if (delta < 3 || delta > 7 || (delta > 3 && g.has_parallel_edges()))
        return {};
    PsiPromise p;
    p.edges = 0;
    bool any_exception = delta == 3;
    for (const auto& comp : component_vertices(g)) {
        std::vector<EdgeId> edges;
        for (VertexId v : comp)
            for (EdgeId e : g.incident(v))
                if (g.endpoints(e).u == v)
                    edges.push_back(e);
        if (edges.empty())
            continue;
        const MultiGraph h = induced_by_edges(g, edges).graph;
        const bool exception = delta == 3 || (h.max_degree() == delta && is_guarantee_exception(h));
        any_exception = any_exception || exception;
        const Rational r = delta == 3 ? Rational(3, 4) : guaranteed_fraction(delta, exception);
        *p.edges += static_cast<int>(r.ceil_times(h.num_edges()));
    }
    p.fraction = delta == 3 ? Rational(3, 4) : guaranteed_fraction(delta, any_exception);
    return p;
}

json meta_details(const MetaLog& log)
{
    int absorb = 0;
    int bridge = 0;
    for (const MetaGroup& grp : log.groups)
        ++(grp.kind == MetaGroup::Kind::Absorb ? absorb : bridge);
    return {
        {"f_size", log.f_size},
        {"normalize_swaps", log.normalize_swaps},
        {"exception_components", log.gamma.size()},
        {"r_size", log.r.size()},
        {"absorb_steps", absorb},
        {"bridge_steps", bridge},
        {"exact_components", log.exact_components},
        {"exact_edges", log.exact_edges},
        {"exact_colored", log.exact_colored},
        {"core_components", log.core_components},
        {"core_edges", log.core_edges},
        {"core_colored", log.core_colored},
        {"alpha", log.alpha.str()},
        {"beta", log.beta.str()},
        {"gamma", log.gamma_ratio.str()},
    };
}

struct SolveOptions {
    int k = 0;
    std::string strategy = "psi";
    std::string family = "none";
    int cap = kSolveOracleCap;
    bool verbose = false;
    bool timing = false;
};

// Runs one strategy and fills the report; the coloring is returned through `colors`.
RunReport solve_graph(const MultiGraph& g, const SolveOptions& opt, std::vector<Color>& colors, int& palette,
                      std::ostream& err)
{
    RunReport r;
    r.n = g.num_vertices();
    r.m = g.num_edges();
    r.max_degree = g.max_degree();
    r.simple = !g.has_parallel_edges();
    r.strategy = opt.strategy;
    r.family = opt.family;

    const auto start = std::chrono::steady_clock::now();
    if (opt.strategy == "psi") {
        r.k = opt.k == 0 ? g.max_degree() : opt.k;
        if (r.k != g.max_degree())
            throw Error(Errc::PaletteMismatch, "psi colors with exactly max-degree colors (" +
                                                   std::to_string(g.max_degree()) + ")");
        PsiOptions po;
        po.verbose = opt.verbose;
        po.trace_stream = &err;
        po.observer = [&r](const Move& mv) { ++r.moves[std::string(move_name(mv.kind))]; };
        po.keep_trace = false;
        PsiResult res = maximize_psi_run(g, po);
        r.iterations = res.iterations;
        colors = res.coloring.colors();
        const PsiPromise p = psi_promise(g);
        r.guarantee = p.fraction;
        r.promised = p.edges;
    } else if (opt.strategy == "subcubic") {
        r.k = opt.k == 0 ? 3 : opt.k;
        if (r.k != 3)
            throw Error(Errc::PaletteMismatch, "subcubic strategy uses 3 colors");
        SubcubicStats stats;
        colors = solve_subcubic(g, &stats).colors();
        r.details = {{"exact_solves", stats.exact_solves},
                     {"oracle_fallbacks", stats.oracle_fallbacks},
                     {"contractions", stats.contractions},
                     {"bridge_splits", stats.bridge_splits}};
        r.guarantee = contains_g3(g) ? Rational(7, 9) : Rational(13, 15);
        r.promised = subcubic_promise(g);
    } else if (opt.strategy == "meta") {
        r.k = opt.k == 0 ? g.max_degree() : opt.k;
        std::optional<ExceptionFamily> storage;
        const ExceptionFamily* fam = family_or_null(opt.family, storage);
        MetaResult res = run_meta(g, r.k, fam);
        colors = res.coloring.colors();
        r.details = meta_details(res.log);
        r.guarantee = meta_ratio(r.k, r.simple, fam);
        r.guarantee_basis = "optimum";
    } else if (opt.strategy == "vizing-baseline") {
        r.k = opt.k == 0 ? g.max_degree() : opt.k;
        colors = vizing_baseline(g, r.k).colors();
        r.guarantee = min(Rational(1), Rational(r.k, g.max_degree() + 1));
        r.promised = static_cast<int>(r.guarantee->ceil_times(r.m));
    } else {
        throw Error(Errc::PreconditionViolated, "unknown strategy '" + opt.strategy + "'");
    }
    const auto stop = std::chrono::steady_clock::now();
    if (opt.timing)
        r.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();

    palette = r.k;
    r.colored = static_cast<int>(std::count_if(colors.begin(), colors.end(), [](Color c) { return c != kUncolored; }));
    r.fraction = fraction_of(r.colored, r.m);
    if (r.m <= opt.cap) {
        r.oracle_optimum = exact_max_ecs(g, r.k, opt.cap).optimum;
        if (r.guarantee_basis == "optimum")
            r.promised = static_cast<int>(r.guarantee->ceil_times(*r.oracle_optimum));
    }
    return r;
}

std::string summary_line(const RunReport& r)
{
    std::ostringstream s;
    s << r.strategy << " k=" << r.k << ": colored " << r.colored << " of " << r.m << " (" << r.fraction.str() << ")";
    if (r.oracle_optimum)
        s << ", optimum " << *r.oracle_optimum;
    if (r.promised)
        s << ", promised " << *r.promised;
    if (r.promised && r.colored < *r.promised)
        s << " GUARANTEE VIOLATED";
    return s.str();
}

// ---- bench ----------------------------------------------------------------

struct BenchRow {
    int k = 0;
    Rational table;
    std::string family;
};

struct BenchSample {
    int m = 0;
    int optimum = 0;
    int meta = 0;
    int meta_promised = 0;
    std::optional<int> psi;
    std::optional<int> psi_promised;
    int vizing = 0;
    int vizing_promised = 0;
};

std::vector<BenchRow> bench_rows()
{
    return {{3, Rational(13, 15), "B3"},
            {4, Rational(9, 11), "K5"},
            {5, Rational(23, 27), "none"},
            {6, Rational(19, 22), "K7"},
            {7, Rational(22, 25), "none"}};
}

// Instance i of row k: odd i links one family pattern to outside vertices
// (when the row has a family), the rest are random graphs of max degree k
// sized to stay within the oracle cap.
MultiGraph bench_instance(const BenchRow& row, int i, std::uint64_t seed, int cap)
{
    const std::uint64_t s = seed * 1'000'003ULL + static_cast<std::uint64_t>(row.k) * 1009ULL + i;
    if (row.family != "none" && i % 2 == 1) {
        LinkedPatternParams p;
        p.pattern = row.family;
        p.extra_vertices = 2 + i % 3;
        p.links = 2 + i % 2;
        p.max_degree = row.k;
        p.seed = s;
        MultiGraph g = gen_linked_patterns(p);
        if (g.num_edges() <= cap)
            return g;
    }
    const int n = row.k + 2 + i % 4;
    const int full = n * row.k / 2;
    const double u = 0.7 + 0.3 * ((i * 7) % 10) / 10.0;
    const double density = std::min(1.0, u * cap / full);
    return gen_random_bounded_degree(n, row.k, density, s);
}

BenchSample bench_sample(const BenchRow& row, const MultiGraph& g, int cap)
{
    BenchSample s;
    s.m = g.num_edges();
    s.optimum = exact_max_ecs(g, row.k, cap).optimum;
    std::optional<ExceptionFamily> storage;
    const ExceptionFamily* fam = family_or_null(row.family, storage);
    s.meta = run_meta(g, row.k, fam).coloring.colored_count();
    s.meta_promised = static_cast<int>(meta_ratio(row.k, true, fam).ceil_times(s.optimum));
    if (g.max_degree() == row.k) {
        PsiOptions po;
        po.keep_trace = false;
        s.psi = maximize_psi_run(g, po).coloring.colored_count();
        s.psi_promised = psi_promise(g).edges;
    }
    s.vizing = vizing_baseline(g, row.k).colored_count();
    s.vizing_promised = static_cast<int>(min(Rational(1), Rational(row.k, g.max_degree() + 1)).ceil_times(s.m));
    return s;
}

int thread_count()
{
    if (const char* env = std::getenv("KECS_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0)
            return t;
    }
    return 1;
}

int run_bench(std::uint64_t seed, int count, int cap, const std::string& json_path, std::ostream& out,
              std::ostream& err)
{
    const std::vector<BenchRow> rows = bench_rows();
    struct Job {
        int row;
        int index;
    };
    std::vector<Job> jobs;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int i = 0; i < count; ++i)
            jobs.push_back({r, i});

    std::vector<BenchSample> samples(jobs.size());
    std::vector<std::string> failures(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j = next++; j < jobs.size(); j = next++) {
            const BenchRow& row = rows[jobs[j].row];
            try {
                const MultiGraph g = bench_instance(row, jobs[j].index, seed, cap);
                samples[j] = bench_sample(row, g, cap);
            } catch (const std::exception& e) {
                failures[j] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    const int threads = std::min<int>(thread_count(), static_cast<int>(jobs.size()));
    for (int t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    for (std::size_t j = 0; j < jobs.size(); ++j)
        if (!failures[j].empty()) {
            err << "bench: k=" << rows[jobs[j].row].k << " instance " << jobs[j].index << ": " << failures[j] << '\n';
            return 1;
        }

    json report = {{"schema", "kecs-bench-report/1"}, {"seed", seed}, {"count", count}, {"cap", cap}};
    json table = json::array();
    int total_violations = 0;
    out << std::left << std::setw(3) << "k" << std::setw(8) << "table" << std::setw(8) << "family" << std::setw(7)
        << "inst" << std::setw(14) << "min meta/OPT" << std::setw(14) << "min psi/OPT" << std::setw(10) << "vizing"
        << std::setw(16) << "min vizing/OPT" << "violations\n";
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        const BenchRow& row = rows[r];
        Rational meta_min = Rational::infinity();
        Rational psi_min = Rational::infinity();
        Rational vizing_min = Rational::infinity();
        int violations = 0;
        int psi_runs = 0;
        for (std::size_t j = 0; j < jobs.size(); ++j) {
            if (jobs[j].row != r)
                continue;
            const BenchSample& s = samples[j];
            const int opt = s.optimum;
            meta_min = min(meta_min, fraction_of(s.meta, opt));
            vizing_min = min(vizing_min, fraction_of(s.vizing, opt));
            violations += s.meta < s.meta_promised;
            violations += s.vizing < s.vizing_promised;
            if (s.psi) {
                ++psi_runs;
                psi_min = min(psi_min, fraction_of(*s.psi, opt));
                violations += s.psi_promised && *s.psi < *s.psi_promised;
            }
        }
        total_violations += violations;
        const Rational baseline(row.k, row.k + 1);
        out << std::left << std::setw(3) << row.k << std::setw(8) << row.table.str() << std::setw(8) << row.family
            << std::setw(7) << count << std::setw(14) << meta_min.str() << std::setw(14)
            << (psi_runs ? psi_min.str() : "-") << std::setw(10) << baseline.str() << std::setw(16)
            << vizing_min.str() << violations << '\n';
        table.push_back({{"k", row.k},
                         {"table_ratio", row.table.str()},
                         {"family", row.family},
                         {"instances", count},
                         {"min_meta_over_opt", meta_min.str()},
                         {"min_psi_over_opt", psi_runs ? json(psi_min.str()) : json(nullptr)},
                         {"psi_runs", psi_runs},
                         {"vizing_ratio", baseline.str()},
                         {"min_vizing_over_opt", vizing_min.str()},
                         {"violations", violations}});
    }
    report["rows"] = table;
    if (!json_path.empty())
        write_to(json_path, out, [&](std::ostream& o) { o << report.dump(2) << '\n'; });
    return total_violations ? kGuaranteeViolated : 0;
}

void add_common(CLI::App* sub, int& k, int& cap, std::uint64_t& seed)
{
    sub->add_option("-k", k, "palette size (defaults to the maximum degree)")->check(CLI::Range(1, kMaxPalette));
    sub->add_option("--cap", cap, "largest edge count handed to the exact oracle")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", seed, "random seed");
}

} // namespace

json to_json(const RunReport& r)
{
    json j = {
        {"schema", kReportSchema},
        {"instance", {{"n", r.n}, {"m", r.m}, {"max_degree", r.max_degree}, {"simple", r.simple}}},
        {"strategy", r.strategy},
        {"family", r.family},
        {"k", r.k},
        {"colored", r.colored},
        {"fraction", r.fraction.str()},
        {"guarantee", or_null(rational_or_null(r.guarantee))},
        {"guarantee_basis", r.guarantee_basis},
        {"promised", or_null(r.promised)},
        {"oracle_optimum", or_null(r.oracle_optimum)},
        {"trace", {{"iterations", r.iterations}, {"moves", r.moves}}},
        {"details", r.details},
    };
    if (r.wall_time_ms)
        j["wall_time_ms"] = *r.wall_time_ms;
    return j;
}

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Maximum k-edge-colorable subgraph toolkit", "kecs"};
    app.require_subcommand(1);

    int k = 0;
    int cap = -1;
    std::uint64_t seed = 1;
    std::string json_path;
    std::string output;
    std::string graph_path;
    SolveOptions solve_opt;

    CLI::App* solve = app.add_subcommand("solve", "color a graph with one strategy");
    add_common(solve, k, cap, seed);
    solve->add_option("graph", graph_path, "graph file, '-' or nothing for stdin");
    solve->add_option("--strategy", solve_opt.strategy)
        ->check(CLI::IsMember({"psi", "subcubic", "meta", "vizing-baseline"}));
    solve->add_option("--family", solve_opt.family)->check(CLI::IsMember({"G3", "B3", "K5", "K7", "none"}));
    solve->add_option("--json", json_path, "write the run report here ('-' for stdout)");
    solve->add_option("-o,--output", output, "write the coloring here ('-' for stdout)");
    solve->add_flag("--verbose", solve_opt.verbose, "trace every improving move on stderr");
    solve->add_flag("--timing", solve_opt.timing, "record wall time in the report");

    CLI::App* oracle = app.add_subcommand("oracle", "exact maximum k-edge-colorable subgraph size");
    add_common(oracle, k, cap, seed);
    oracle->add_option("graph", graph_path);
    oracle->add_option("-o,--output", output, "also write an optimal coloring here");

    CLI::App* gamma = app.add_subcommand("gamma", "exact colorable fraction c_k / |E|");
    add_common(gamma, k, cap, seed);
    gamma->add_option("graph", graph_path);

    std::string named;
    std::string linked;
    bool random = false;
    RandomGraphParams rp;
    LinkedPatternParams lp;
    CLI::App* gen = app.add_subcommand("gen", "write a named or random instance");
    gen->add_option("--seed", seed, "random seed");
    auto* named_opt = gen->add_option("--named", named, "named graph tag");
    auto* random_opt = gen->add_flag("--random", random, "random connected graph of bounded degree");
    auto* linked_opt = gen->add_option("--linked", linked, "copies of a pattern joined by random links");
    named_opt->excludes(random_opt)->excludes(linked_opt);
    random_opt->excludes(linked_opt);
    gen->add_option("--n", rp.n)->check(CLI::PositiveNumber);
    gen->add_option("--delta", rp.max_degree)->check(CLI::PositiveNumber);
    gen->add_option("--density", rp.density)->check(CLI::Range(0.0, 1.0));
    gen->add_flag("--multi", rp.multi);
    gen->add_option("--copies", lp.copies)->check(CLI::PositiveNumber);
    gen->add_option("--extra", lp.extra_vertices)->check(CLI::NonNegativeNumber);
    gen->add_option("--links", lp.links)->check(CLI::NonNegativeNumber);
    gen->add_option("-o,--output", output, "output path ('-' for stdout)");

    std::string coloring_path;
    CLI::App* verify = app.add_subcommand("verify", "re-validate a coloring against its graph");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("coloring", coloring_path)->required();
    verify->add_option("-k", k, "palette the coloring must fit in");

    int count = 20;
    CLI::App* bench = app.add_subcommand("bench", "ratio table against the exact optimum for k = 3..7");
    bench->add_option("--seed", seed);
    bench->add_option("--count", count, "instances per row")->check(CLI::PositiveNumber);
    bench->add_option("--cap", cap)->check(CLI::NonNegativeNumber);
    bench->add_option("--json", json_path, "write the bench report here ('-' for stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*solve) {
            const MultiGraph g = read_graph_arg(graph_path, in);
            solve_opt.k = k;
            solve_opt.cap = cap < 0 ? kSolveOracleCap : cap;
            std::vector<Color> colors;
            int palette = 0;
            const RunReport r = solve_graph(g, solve_opt, colors, palette, err);
            const bool to_stdout = output == "-" || json_path == "-";
            (to_stdout ? err : out) << summary_line(r) << '\n';
            if (!output.empty()) {
                const PartialColoring c = PartialColoring::from_colors(g, palette, colors);
                write_to(output, out, [&](std::ostream& o) { write_coloring(o, c); });
            }
            if (!json_path.empty())
                write_to(json_path, out, [&](std::ostream& o) { o << to_json(r).dump(2) << '\n'; });
            return r.promised && r.colored < *r.promised ? kGuaranteeViolated : 0;
        }
        if (*oracle || *gamma) {
            const MultiGraph g = read_graph_arg(graph_path, in);
            const int palette = k == 0 ? g.max_degree() : k;
            const OracleResult res = exact_max_ecs(g, palette, cap < 0 ? kDefaultOracleCap : cap);
            if (*oracle) {
                out << res.optimum << '\n';
                if (!output.empty()) {
                    const PartialColoring c = PartialColoring::from_colors(g, palette, res.witness);
                    write_to(output, out, [&](std::ostream& o) { write_coloring(o, c); });
                }
            } else {
                out << res.gamma.str() << '\n';
            }
            return 0;
        }
        if (*gen) {
            MultiGraph g;
            if (!named.empty()) {
                g = gen_named(named);
            } else if (!linked.empty()) {
                lp.pattern = linked;
                lp.max_degree = rp.max_degree;
                lp.seed = seed;
                lp.multi = rp.multi;
                g = gen_linked_patterns(lp);
            } else if (random) {
                rp.seed = seed;
                g = gen_random_bounded_degree(rp);
            } else {
                err << "gen: one of --named, --random, --linked is required\n";
                return 1;
            }
            write_to(output.empty() ? "-" : output, out, [&](std::ostream& o) { write_graph(o, g); });
            return 0;
        }
        if (*verify) {
            const MultiGraph g = parse_graph_file(graph_path);
            const ColoringFile cf = parse_coloring_file(coloring_path);
            if (cf.edges != g.num_edges()) {
                err << "verify: coloring covers " << cf.edges << " edges, graph has " << g.num_edges() << '\n';
                return 1;
            }
            const int palette = k == 0 ? cf.palette : k;
            if (cf.palette > palette) {
                err << "verify: coloring uses palette " << cf.palette << ", allowed " << palette << '\n';
                return 1;
            }
            const Validation v = validate_assignment(g, palette, cf.colors);
            if (!v) {
                err << "verify: " << v.message << '\n';
                return 1;
            }
            const int colored =
                static_cast<int>(std::count_if(cf.colors.begin(), cf.colors.end(), [](Color c) { return c != kUncolored; }));
            out << "ok: " << colored << " of " << g.num_edges() << " edges properly colored with " << palette
                << " colors\n";
            return 0;
        }
        if (*bench)
            return run_bench(seed, count, cap < 0 ? kDefaultOracleCap : cap, json_path, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace kecs::cli
