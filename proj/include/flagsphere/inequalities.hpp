#pragma once

#include <vector>

#include "flagsphere/complex.hpp"
#include "flagsphere/matching.hpp"
#include "flagsphere/polynomial.hpp"

namespace flagsphere {

struct DisjointFacetResult {
    bool found = false;
    Face facet;
    bool via_recipe = false;  // link-descent construction vs direct scan
};

/// A facet disjoint from the face sigma. First tries the constructive
/// recipe (descend through vertex links, then swap the deepest vertex across
/// a ridge — valid on flag homology spheres), falling back to a direct scan.
/// found == false on inputs where no disjoint facet exists at all.
DisjointFacetResult disjoint_facet(const SimplicialComplex& k,
                                   const Face& sigma);

/// h(lk_v) + t·h(lk_u) <= h(K) for a non-edge uv, with equality exactly when
/// every facet meets {u, v}. The u/v roles are asymmetric; both orders are
/// valid instances.
struct ShellingInequalityResult {
    VertexId u = -1;
    VertexId v = -1;
    bool holds = false;
    bool equality = false;
    bool facets_covered = false;  // every facet contains u or v
    bool tightness_consistent = false;
    bool pass = false;  // holds && tightness_consistent
    IntPolynomial lhs;
    IntPolynomial rhs;
};

/// Errors when uv is an edge (or u == v / out of range).
ShellingInequalityResult shelling_inequality_check(const SimplicialComplex& k,
                                                   VertexId u, VertexId v);

/// (1+t) · Σ_v h(lk_v) <= f0 · h(K), with equality exactly on octahedral
/// spheres.
struct VertexSumInequalityCheck {
    bool pass = false;
    bool holds = false;
    bool equality = false;
    bool octahedral = false;
    bool tightness_consistent = false;
    IntPolynomial lhs;
    IntPolynomial rhs;
};

VertexSumInequalityCheck h_ineq_check(const SimplicialComplex& k);

/// Re-derives the vertex-sum inequality by summing one shelling instance per
/// arc of the decomposed half-integral matching on the complement graph
/// (matching edges oriented both ways, odd cycles cyclically): the number of
/// arcs is f0, the per-arc left sides add up to (1+t)·Σ_v h(lk_v) exactly,
/// and each instance holds individually.
struct ArcSummationCheck {
    bool pass = false;
    long long arcs = 0;
    bool arcs_equal_f0 = false;
    bool per_arc_all_hold = false;
    bool sum_matches = false;  // Σ arc lhs == (1+t) Σ_v h(lk_v)
    bool sum_bounded = false;  // Σ arc lhs <= f0 · h
    IntPolynomial total;
    IntPolynomial expected;
    IntPolynomial bound;
};

/// Errors when an arc of m joins vertices adjacent in k (m must be a
/// matching on the complement graph).
ArcSummationCheck arc_summation_check(const SimplicialComplex& k,
                                      const HalfIntegralMatching& m);

/// h1·h_i >= (d-i+1)·h_{i-1} + (i+1)·h_{i+1}, evaluated literally for every
/// 0 <= i <= d with h_{-1} = h_{d+1} = 0. The rows document where it holds;
/// pass means all rows hold.
struct H1HiRow {
    int i = 0;
    Integer lhs;
    Integer rhs;
    bool holds = false;
};
struct H1HiCheck {
    bool pass = false;
    int d = 0;
    std::vector<H1HiRow> rows;
    std::vector<int> failing_indices;
};

H1HiCheck h1hi_ineq_check(const SimplicialComplex& k);

/// Exact bridge between the two inequalities: coefficient i of
/// f0·h − (1+t)·Σ_v h(lk_v) equals h1·h_i − (d−i+1)·h_{i−1} − (i+1)·h_{i+1}
/// whenever the vertex-link h-sum identity holds, so the vertex-sum
/// inequality implies the h1·h_i one arithmetically.
struct GapIdentityCheck {
    bool pass = false;
    IntPolynomial gap;    // f0·h − (1+t)·Σ_v h(lk_v)
    IntPolynomial combo;  // Σ_i [h1·h_i − (d−i+1)h_{i−1} − (i+1)h_{i+1}] t^i
};

GapIdentityCheck gap_identity_check(const SimplicialComplex& k);

/// Proper (dim+1)-coloring search for the 1-skeleton (backtracking with a
/// node cap; canonical color introduction order for pruning).
enum class ColoringOutcome { kColorable, kNotColorable, kInconclusive };
struct ColoringResult {
    ColoringOutcome outcome = ColoringOutcome::kInconclusive;
    std::vector<int> colors;  // size n when colorable
    long long nodes_visited = 0;
};

ColoringResult balanced_coloring(const SimplicialComplex& k,
                                 long long node_cap = 10'000'000);

/// With a valid proper (dim+1)-coloring: every vertex has another vertex of
/// its color (hence a non-neighbor); the complement graph then also admits a
/// half-integral perfect matching and the vertex-sum inequality holds.
struct BalancedCheck {
    bool pass = false;
    std::vector<VertexId> lonely_vertices;  // no same-color partner
    bool complement_pm_exists = false;
    bool vertex_sum_holds = false;
};

/// Errors when `colors` is not a valid proper (dim+1)-coloring of k.
BalancedCheck balanced_nonedge_check(const SimplicialComplex& k,
                                     const std::vector<int>& colors);

}  // namespace flagsphere
