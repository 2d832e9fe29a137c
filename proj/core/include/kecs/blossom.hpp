#pragma once

#include <cstdint>
#include <vector>

namespace kecs {

struct WeightedEdge {
    int u = 0;
    int v = 0;
    std::int64_t weight = 0;
};

/// Maximum-weight matching in a general graph (Edmonds' blossom algorithm,
/// primal-dual, O(n^3)). Weights must be non-negative; they are doubled
/// internally so all dual values stay integral. Returns mate[v] or -1.
std::vector<int> max_weight_matching(int n, const std::vector<WeightedEdge>& edges);

} // namespace kecs
