#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "kecs/graph.hpp"

namespace kecs {

/// Tags (case-insensitive): G3, B3, Gstar5, Petersen, K<n>, K<n>-e, C<n>,
/// K3,3, B(<odd d>), TwoG3Bridge, DoubledC5, B3TrianglePreimage(<i>),
/// Gstar5TrianglePreimage(<i>) with i in 1..3. Throws BadTag, EvenDelta.
MultiGraph gen_named(std::string_view tag);

/// K_{d+1} minus a matching of (d-1)/2 edges, plus an apex joined to the
/// matched vertices. Throws EvenDelta for even d.
MultiGraph make_b_delta(int d);
MultiGraph make_petersen();
MultiGraph make_two_g3_bridge();
/// 5-cycle with two non-adjacent sides doubled: subcubic, triangle-free,
/// and only 6 of its 7 edges are 3-edge-colorable.
MultiGraph make_doubled_c5();

/// Every subcubic multigraph that contracts to h by collapsing one
/// triangle, up to isomorphism, ordered by the expanded vertex.
std::vector<MultiGraph> triangle_preimages(const MultiGraph& h);

/// Seeded generator with a bounded draw that does not depend on the
/// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    double unit();
    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

struct RandomGraphParams {
    int n = 10;
    int max_degree = 3;
    /// Fraction of floor(n * max_degree / 2) edges to aim for.
    double density = 1.0;
    std::uint64_t seed = 1;
    /// Permit parallel edges.
    bool multi = false;
};

/// Connected graph with maximum degree at most max_degree: a random
/// spanning tree, then rejection-sampled extra edges until the target is
/// met or sampling saturates. Throws UnsatisfiableParameters.
MultiGraph gen_random_bounded_degree(const RandomGraphParams& params);
MultiGraph gen_random_bounded_degree(int n, int max_degree, double density, std::uint64_t seed);

/// Disjoint copies of a named pattern plus extra vertices, joined by random
/// edges between different blocks.
struct LinkedPatternParams {
    std::string pattern = "G3";
    int copies = 1;
    int extra_vertices = 2;
    /// Number of random linking edges to place.
    int links = 3;
    /// Degree cap for the linking step (pattern degrees are kept as is).
    int max_degree = 4;
    std::uint64_t seed = 1;
    /// Allow a link parallel to an earlier link.
    bool multi = false;
};

/// Stops early when sampling saturates.
MultiGraph gen_linked_patterns(const LinkedPatternParams& params);

} // namespace kecs
