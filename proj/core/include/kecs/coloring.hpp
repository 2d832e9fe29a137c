#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "kecs/graph.hpp"

namespace kecs {

/// 1..k for a real color, 0 for uncolored.
using Color = std::int32_t;
inline constexpr Color kUncolored = 0;
inline constexpr int kMaxPalette = 31;

/// Set of colors 1..31 as a bitmask.
class ColorSet {
public:
    constexpr ColorSet() = default;
    static constexpr ColorSet from_mask(std::uint32_t mask) { ColorSet s; s.bits_ = mask; return s; }
    /// {1..k}
    static constexpr ColorSet palette(int k) { return from_mask(((std::uint32_t{1} << k) - 1) << 1); }

    constexpr bool contains(Color c) const { return (bits_ >> c) & 1U; }
    constexpr void insert(Color c) { bits_ |= std::uint32_t{1} << c; }
    constexpr void erase(Color c) { bits_ &= ~(std::uint32_t{1} << c); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    /// Smallest member, or kUncolored when empty.
    constexpr Color lowest() const { return bits_ == 0 ? kUncolored : std::countr_zero(bits_); }
    constexpr std::uint32_t mask() const { return bits_; }

    std::vector<Color> members() const
    {
        std::vector<Color> out;
        for (std::uint32_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    friend constexpr ColorSet operator&(ColorSet a, ColorSet b) { return from_mask(a.bits_ & b.bits_); }
    friend constexpr ColorSet operator|(ColorSet a, ColorSet b) { return from_mask(a.bits_ | b.bits_); }
    friend constexpr ColorSet operator-(ColorSet a, ColorSet b) { return from_mask(a.bits_ & ~b.bits_); }
    constexpr ColorSet& operator|=(ColorSet o) { bits_ |= o.bits_; return *this; }
    friend constexpr bool operator==(ColorSet, ColorSet) = default;

private:
    std::uint32_t bits_ = 0;
};

std::string to_string(ColorSet s);

/// Proper partial k-edge-coloring of a graph the caller keeps alive.
/// Maintains per-vertex used masks and a color -> edge index so that
/// alternating-path steps are O(1).
class PartialColoring {
public:
    PartialColoring(const MultiGraph& g, int k);
    /// Throws ImproperAssignment / BadDimensions if `colors` is not a proper k-coloring of g.
    static PartialColoring from_colors(const MultiGraph& g, int k, const std::vector<Color>& colors);

    const MultiGraph& graph() const noexcept { return *g_; }
    int palette() const noexcept { return k_; }

    Color color(EdgeId e) const { return color_[e]; }
    bool is_colored(EdgeId e) const { return color_[e] != kUncolored; }
    const std::vector<Color>& colors() const noexcept { return color_; }
    int colored_count() const noexcept { return colored_; }
    int uncolored_count() const noexcept { return g_->num_edges() - colored_; }

    ColorSet used(VertexId v) const { return used_[v]; }
    ColorSet free(VertexId v) const { return ColorSet::palette(k_) - used_[v]; }
    /// Edge at v carrying color c, or kNoEdge.
    EdgeId edge_with(VertexId v, Color c) const { return at_[static_cast<std::size_t>(v) * (k_ + 1) + c]; }

    /// Colors e with c (recoloring if needed). Throws ImproperAssignment if c
    /// is used at an endpoint by another edge or lies outside 1..k.
    void assign(EdgeId e, Color c);
    void unassign(EdgeId e);

    /// Changes on every mutation; copies share it until one of them mutates.
    std::uint64_t stamp() const noexcept { return stamp_; }

    friend bool operator==(const PartialColoring& a, const PartialColoring& b) { return a.color_ == b.color_; }

private:
    void touch();

    const MultiGraph* g_;
    int k_;
    int colored_ = 0;
    std::uint64_t stamp_;
    std::vector<Color> color_;
    std::vector<ColorSet> used_;
    std::vector<EdgeId> at_;
};

/// The set of colors missing at v.
inline ColorSet free_colors(const PartialColoring& c, VertexId v) { return c.free(v); }

struct AlternatingPath {
    Color a = kUncolored;
    Color b = kUncolored;
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    VertexId start() const { return vertices.front(); }
    VertexId end() const { return vertices.back(); }
};

/// The maximal (ab, x)-path. Throws BothOrNeitherFreeAtStart when neither
/// color is free at x; when both are, the path is just x.
AlternatingPath alternating_path(const PartialColoring& c, Color a, Color b, VertexId x);

/// Exchanges a and b along the (ab, x)-path and returns its other end.
VertexId swap_alternating_path(PartialColoring& c, Color a, Color b, VertexId x);

struct FreeComponent {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
    ColorSet free_union;
    /// |E| - |V| + 1
    int cycles = 0;

    bool nontrivial() const { return !edges.empty(); }
};

/// Components of the graph of free edges: uncolored edges over the vertices
/// that have a free color (plus endpoints of uncolored edges, which matter
/// only when k is below the maximum degree).
struct FreeComponentIndex {
    std::vector<int> component_of_vertex; // -1 when outside
    std::vector<int> component_of_edge;   // -1 for colored edges
    std::vector<FreeComponent> components;

    int nontrivial_count() const;
};

FreeComponentIndex free_components(const PartialColoring& c);

/// Fan around `center`. Index 0 is the uncolored edge; pred[0] = -1.
struct Fan {
    VertexId center = kNoVertex;
    std::vector<EdgeId> edges;
    std::vector<VertexId> ends;
    std::vector<int> pred;
    std::vector<bool> full;
    std::uint64_t stamp = 0;

    int size() const { return static_cast<int>(edges.size()); }
};

/// Maximal fan on the uncolored edge e at center x. Extension always takes
/// the lowest qualifying EdgeId; pred is the lowest end index whose free set
/// holds its color. Throws EdgeNotUncolored / IndexOutOfRange.
Fan build_maximal_fan(const PartialColoring& c, VertexId x, EdgeId e);
/// Same, for the lowest uncolored edge joining x and y.
Fan build_maximal_fan_to(const PartialColoring& c, VertexId x, VertexId y);

/// Shifts colors down the pred chain from end i; edge i becomes uncolored.
/// Throws StaleFan when c changed since f was built.
void rotate_fan(PartialColoring& c, const Fan& f, int i);

bool is_stable_fan(const PartialColoring& c, const Fan& f);
/// Checks the fan invariants against c (without consulting the stamp).
bool fan_is_valid(const PartialColoring& c, const Fan& f);

struct Validation {
    bool ok = true;
    std::string message;
    explicit operator bool() const { return ok; }
};

/// Recomputes properness and every cached structure from scratch.
Validation validate_coloring(const MultiGraph& g, const PartialColoring& c);
/// Properness of a raw assignment.
Validation validate_assignment(const MultiGraph& g, int k, const std::vector<Color>& colors);

} // namespace kecs
