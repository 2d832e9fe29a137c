#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kecs/coloring.hpp"
#include "kecs/graph.hpp"
#include "kecs/rational.hpp"

namespace kecs {

/// One exception graph A with its exact tables: c_k(A), a witness, and
/// c_k(A - e) with a witness for every edge e.
struct FamilyMember {
    std::string name;
    MultiGraph graph;
    int optimum = 0;
    std::vector<Color> witness;
    bool regular = false;
    std::vector<int> optimum_without;
    /// Colors on A's edges with edge e left uncolored.
    std::vector<std::vector<Color>> witness_without;
};

struct ExceptionFamily {
    int k = 0;
    std::vector<FamilyMember> members;
};

/// Builds a family from pattern names and checks that it is k-normal:
/// max degree k with at most one vertex below k, c_k(A) equal to the
/// matching bound k*floor(|V(A)|/2) (which caps c_k of any graph on |V(A)|
/// vertices), 2-edge-connected, and c_k(A - e) = c_k(A) for every edge.
/// Throws NotKNormal naming the failed check, UnknownPattern.
ExceptionFamily make_family(int k, const std::vector<std::string>& patterns);

/// "G3" (k=3), "B3" (k=3), "K5" (k=4), "K7" (k=6). Throws UnknownPattern.
ExceptionFamily named_family(std::string_view name);

struct FamilyConstants {
    Rational beta;
    Rational gamma;
};

/// beta: min over non-k-regular A and any B of (c(A)+c(B)+1)/(|E(A)|+|E(B)|+1),
/// infinite when every member is k-regular; gamma: min over A of
/// (c(A)+1)/(|E(A)|+1). Throws NotKNormal on an empty family.
FamilyConstants family_constants(const ExceptionFamily& fam);

/// Ratio promised by the core solver on connected k-matchings outside the
/// exceptions: 7/9 (k=3, multigraphs), 13/15 (k=3, simple), then 5/6,
/// 23/27, 19/22, 22/25 for k = 4..7. Throws UnsupportedDelta.
Rational core_ratio(int k, bool simple);

/// Core solver: the subcubic pipeline for k=3, otherwise Misra-Gries when
/// the maximum degree is below k and the potential engine at max degree k.
/// Returns colors per edge of h in 1..k.
std::vector<Color> core_color(const MultiGraph& h, int k);

/// Index of the member isomorphic to h.
std::optional<int> match_family(const ExceptionFamily& fam, const MultiGraph& h);

struct GammaEntry {
    std::vector<VertexId> vertices; // ascending
    std::vector<EdgeId> edges;      // ascending, edges of g
    int member = 0;
};

/// Components of the edge set f (edges of g) isomorphic to a family member,
/// ordered by lowest vertex.
std::vector<GammaEntry> detect_exceptions(const MultiGraph& g, const std::vector<EdgeId>& f,
                                          const ExceptionFamily& fam);

/// Swaps edges until no edge xy of g has x in a family component Q of f,
/// y outside Q and deg_f(y) < k: an edge of Q at x is replaced by xy.
/// The size of f is unchanged. Returns the number of swaps.
int normalize_F(const MultiGraph& g, std::vector<EdgeId>& f, const ExceptionFamily& fam);

/// Graph on the components of F whose edges are the R edges between them.
struct StarForest {
    std::vector<int> component_of_vertex; // -1 for vertices without F edges
    int components = 0;
    std::vector<std::pair<int, int>> links; // distinct component pairs, ascending
    std::vector<int> degree;
    /// Forest whose every tree has diameter at most 2.
    bool is_star_forest() const;
};

StarForest star_forest(const MultiGraph& g, const std::vector<bool>& in_f, const std::vector<bool>& in_r);

/// One batch of F edges removed by the absorb step (leaf Q through xy,
/// dropping yz, optionally a second leaf Q' through zw) or by the bridge
/// step (leaf Q, bridge yz and the exception piece P_yz).
struct MetaGroup {
    enum class Kind { Absorb, Bridge } kind = Kind::Absorb;
    std::vector<EdgeId> removed_f;
    std::vector<EdgeId> removed_r;
    int colored = 0;
    int removed = 0;
};

struct MetaLog {
    int f_size = 0;
    int normalize_swaps = 0;
    std::vector<GammaEntry> gamma;
    std::vector<EdgeId> r;
    StarForest forest;
    std::vector<MetaGroup> groups;
    int exact_components = 0;
    int exact_edges = 0;
    int exact_colored = 0;
    int core_components = 0;
    int core_edges = 0;
    int core_colored = 0;
    int colored = 0;
    Rational alpha{1};
    Rational beta = Rational::infinity();
    Rational gamma_ratio = Rational::infinity();
};

struct MetaResult {
    PartialColoring coloring;
    MetaLog log;
};

/// The exception-family approximation: maximum k-matching F, normalization,
/// exception matching R, absorb and bridge steps, then exact tables on the
/// surviving exception components and the core solver elsewhere. With no
/// family this is the plain "core on a maximum k-matching" algorithm.
/// Throws CoreRatioMiss if the core falls short of its ratio on a component
/// it covers, InvariantViolated if a maintained invariant breaks,
/// NotSimple for k >= 4 on multigraphs, UnsupportedDelta outside 3..7.
MetaResult run_meta(const MultiGraph& g, int k, const ExceptionFamily* fam);

} // namespace kecs
