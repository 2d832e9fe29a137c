#pragma once

#include <cstdint>
#include <vector>

#include "kecs/coloring.hpp"
#include "kecs/graph.hpp"
#include "kecs/rational.hpp"

namespace kecs {

inline constexpr int kDefaultOracleCap = 26;

struct OracleResult {
    int optimum = 0;
    /// Proper k-coloring with exactly `optimum` colored edges.
    std::vector<Color> witness;
    /// optimum / |E|, or 1 for an edgeless graph.
    Rational gamma{1};
    std::int64_t nodes = 0;
};

/// Maximum k-edge-colorable subgraph by branch and bound. Throws
/// InstanceTooLarge when the graph has more than `cap` edges.
OracleResult exact_max_ecs(const MultiGraph& g, int k, int cap = kDefaultOracleCap);

Rational gamma_k(const MultiGraph& g, int k, int cap = kDefaultOracleCap);

} // namespace kecs
