#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kecs/coloring.hpp"
#include "kecs/graph.hpp"

namespace kecs {

/// Graph text format:
///   # comment
///   p ecs <n> <m> [simple|multi]     (simple when omitted)
///   e <u> <v>                        (m lines, 0-based ids)
/// Throws SyntaxError (with the line number), CountMismatch, LoopEdge,
/// IndexOutOfRange, DuplicateEdgeInSimpleMode.
MultiGraph parse_graph(std::istream& in);
MultiGraph parse_graph_file(const std::string& path);
MultiGraph parse_graph_string(const std::string& text);

/// Writes the format above; `multi` is declared iff g has parallel edges.
void write_graph(std::ostream& out, const MultiGraph& g);

/// Coloring text format:
///   s ecs <m> <k>
///   c <edge> <color>                 (one line per colored edge, color 1..k)
/// Uncolored edges are omitted.
struct ColoringFile {
    int edges = 0;
    int palette = 0;
    std::vector<Color> colors;
};

ColoringFile parse_coloring(std::istream& in);
ColoringFile parse_coloring_file(const std::string& path);
void write_coloring(std::ostream& out, const PartialColoring& c);

} // namespace kecs
