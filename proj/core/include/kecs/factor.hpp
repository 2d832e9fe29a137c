#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kecs/graph.hpp"

namespace kecs {

/// Per-vertex degree window [lower, upper] for an [f,g]-factor.
struct DegreeBounds {
    std::vector<int> lower;
    std::vector<int> upper;
};

struct FactorResult {
    std::vector<EdgeId> edges; // ascending
    std::int64_t weight = 0;
};

/// Maximum-weight edge set whose degree at every v lies in
/// [lower[v], upper[v]]. Weights are non-negative integers. Reduced to
/// maximum-weight matching on an edge-end gadget. Throws Infeasible when no
/// such edge set exists, BadDimensions on size mismatches.
FactorResult max_weight_fg_factor(const MultiGraph& g, const DegreeBounds& bounds,
                                  std::span<const std::int64_t> weight);

/// Largest edge set covering every vertex at most k times.
std::vector<EdgeId> max_k_matching(const MultiGraph& g, int k);

/// Membership of the exception components used to build R.
struct ExceptionComponent {
    std::vector<VertexId> vertices; // ascending
    /// |E(Q)| - c_k(Q)
    int deficit = 0;
};

/// k-matching R of g in which every edge leaves some listed component,
/// maximizing the summed deficit of the components it touches, and
/// inclusion-wise minimal among such sets. Solved through the
/// [f,g]-factor gadget with one hub u_Q and one bonus vertex w_Q per
/// component.
std::vector<EdgeId> build_exception_matching_R(const MultiGraph& g, int k,
                                               const std::vector<ExceptionComponent>& gamma);

/// Summed deficit of the components that some edge of r leaves.
int touched_deficit(const MultiGraph& g, std::span<const EdgeId> r, const std::vector<ExceptionComponent>& gamma);

} // namespace kecs
