#include "kecs/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "kecs/error.hpp"

namespace kecs {

namespace {

[[noreturn]] void syntax(int line, const std::string& what)
{
    throw Error(Errc::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

// Splits a line into whitespace-separated words; false for blank and
// comment lines.
bool words(const std::string& line, std::vector<std::string>& out)
{
    out.clear();
    std::istringstream ss(line);
    std::string w;
    while (ss >> w) {
        if (out.empty() && w.front() == '#')
            return false;
        out.push_back(w);
    }
    return !out.empty();
}

int to_int(const std::string& w, int line)
{
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(w, &used);
    } catch (const std::exception&) {
        syntax(line, "expected an integer, got '" + w + "'");
    }
    if (used != w.size() || value < 0 || value > 1'000'000'000)
        syntax(line, "expected a non-negative integer, got '" + w + "'");
    return static_cast<int>(value);
}

std::ifstream open(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::SyntaxError, "cannot open '" + path + "'");
    return in;
}

} // namespace

MultiGraph parse_graph(std::istream& in)
{
    std::string line;
    std::vector<std::string> w;
    int lineno = 0;
    int n = -1;
    int m = -1;
    bool simple = true;
    std::vector<std::pair<int, int>> pairs;
    while (std::getline(in, line)) {
        ++lineno;
        if (!words(line, w))
            continue;
        if (w[0] == "p") {
            if (n != -1)
                syntax(lineno, "second header line");
            if ((w.size() != 4 && w.size() != 5) || w[1] != "ecs")
                syntax(lineno, "header must be 'p ecs <n> <m> [simple|multi]'");
            n = to_int(w[2], lineno);
            m = to_int(w[3], lineno);
            if (w.size() == 5) {
                if (w[4] == "multi")
                    simple = false;
                else if (w[4] != "simple")
                    syntax(lineno, "graph kind must be 'simple' or 'multi'");
            }
        } else if (w[0] == "e") {
            if (n == -1)
                syntax(lineno, "edge before the header");
            if (w.size() != 3)
                syntax(lineno, "edge line must be 'e <u> <v>'");
            const int u = to_int(w[1], lineno);
            const int v = to_int(w[2], lineno);
            if (u == v)
                throw Error(Errc::LoopEdge, "line " + std::to_string(lineno) + ": loop at vertex " + std::to_string(u));
            if (u >= n || v >= n)
                throw Error(Errc::IndexOutOfRange, "line " + std::to_string(lineno) + ": vertex id beyond n");
            pairs.emplace_back(u, v);
        } else {
            syntax(lineno, "unknown line type '" + w[0] + "'");
        }
    }
    if (n == -1)
        throw Error(Errc::SyntaxError, "missing 'p ecs' header");
    if (static_cast<int>(pairs.size()) != m)
        throw Error(Errc::CountMismatch, "header declares " + std::to_string(m) + " edges, found " +
                                             std::to_string(pairs.size()));
    return build_graph(n, pairs, simple);
}

MultiGraph parse_graph_file(const std::string& path)
{
    std::ifstream in = open(path);
    return parse_graph(in);
}

MultiGraph parse_graph_string(const std::string& text)
{
    std::istringstream in(text);
    return parse_graph(in);
}

void write_graph(std::ostream& out, const MultiGraph& g)
{
    out << "p ecs " << g.num_vertices() << ' ' << g.num_edges() << ' '
        << (g.has_parallel_edges() ? "multi" : "simple") << '\n';
    for (const Endpoints& e : g.edges())
        out << "e " << e.u << ' ' << e.v << '\n';
}

ColoringFile parse_coloring(std::istream& in)
{
    std::string line;
    std::vector<std::string> w;
    int lineno = 0;
    ColoringFile out;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!words(line, w))
            continue;
        if (w[0] == "s") {
            if (header)
                syntax(lineno, "second header line");
            if (w.size() != 4 || w[1] != "ecs")
                syntax(lineno, "header must be 's ecs <m> <k>'");
            out.edges = to_int(w[2], lineno);
            out.palette = to_int(w[3], lineno);
            if (out.palette < 1 || out.palette > kMaxPalette)
                syntax(lineno, "palette out of range");
            out.colors.assign(out.edges, kUncolored);
            header = true;
        } else if (w[0] == "c") {
            if (!header)
                syntax(lineno, "color before the header");
            if (w.size() != 3)
                syntax(lineno, "color line must be 'c <edge> <color>'");
            const int e = to_int(w[1], lineno);
            const int c = to_int(w[2], lineno);
            if (e >= out.edges)
                throw Error(Errc::IndexOutOfRange, "line " + std::to_string(lineno) + ": edge id beyond m");
            if (c < 1 || c > out.palette)
                syntax(lineno, "color outside 1..k");
            if (out.colors[e] != kUncolored)
                syntax(lineno, "edge colored twice");
            out.colors[e] = c;
        } else {
            syntax(lineno, "unknown line type '" + w[0] + "'");
        }
    }
    if (!header)
        throw Error(Errc::SyntaxError, "missing 's ecs' header");
    return out;
}

ColoringFile parse_coloring_file(const std::string& path)
{
    std::ifstream in = open(path);
    return parse_coloring(in);
}

void write_coloring(std::ostream& out, const PartialColoring& c)
{
    out << "s ecs " << c.colors().size() << ' ' << c.palette() << '\n';
    for (EdgeId e = 0; e < static_cast<EdgeId>(c.colors().size()); ++e)
        if (c.is_colored(e))
            out << "c " << e << ' ' << c.color(e) << '\n';
}

} // namespace kecs
