#pragma once

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "flagsphere/complex.hpp"
#include "flagsphere/graph.hpp"

namespace flagsphere {

/// Complement of the 1-skeleton: the non-edge graph of the complex.
Graph complement_graph(const SimplicialComplex& k);

/// A half-integral perfect matching in canonical decomposed form: a set of
/// weight-1 edges plus vertex-disjoint odd cycles whose edges carry weight
/// 1/2, together covering every vertex with total weight 1. (Any
/// half-integral solution in halves {0,1,2} decomposes this way after
/// re-rounding its even cycles to alternating integral edges.)
struct HalfIntegralMatching {
    std::vector<std::pair<VertexId, VertexId>> matching_edges;  // u < v
    std::vector<std::vector<VertexId>> odd_cycles;  // cyclic vertex order

    /// Weight of edge uv in halves: 2, 1, or 0.
    int halves(VertexId u, VertexId v) const;

    /// All edges of positive weight as (u, v, halves), u < v, sorted.
    std::vector<std::tuple<VertexId, VertexId, int>> weighted_edges() const;
};

/// Finds a half-integral perfect matching, or nullopt when none exists.
/// Reduction: G has one iff its bipartite double cover has a perfect
/// matching (found here with Hopcroft–Karp). Deterministic for a fixed
/// input.
std::optional<HalfIntegralMatching> half_integral_pm(const Graph& g);

/// Normalizes raw per-edge weights (in halves: 1 or 2 per listed edge, 0
/// entries ignored) into the canonical decomposed form: validates that the
/// weights are a half-integral perfect matching of g (edges exist, no
/// duplicates, every vertex's weights sum to 1), chains the weight-1/2 edges
/// into their disjoint cycles, and re-rounds even cycles to alternating
/// full edges. Errors on malformed input.
HalfIntegralMatching decompose_half_weights(
    const Graph& g,
    const std::vector<std::tuple<VertexId, VertexId, int>>& weights);

/// Full audit of a claimed matching against g: edges exist, parts are
/// disjoint, cycles are odd of length >= 3, every vertex is covered exactly
/// once.
bool verify_half_integral(const Graph& g, const HalfIntegralMatching& m);

/// Exhaustive check of the halving obstruction: some X ⊆ V isolates more
/// than |X| vertices of G - X iff no half-integral perfect matching exists.
/// Returns such an X, or nullopt when none. Errors above 20 vertices (2^n
/// scan).
std::optional<Face> half_tutte_violator(const Graph& g);

inline bool half_tutte_brute(const Graph& g) {
    return !half_tutte_violator(g).has_value();
}

}  // namespace flagsphere
