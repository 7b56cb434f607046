#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "flagsphere/complex.hpp"
#include "flagsphere/polynomial.hpp"

namespace flagsphere {

struct Edge {
    VertexId u = -1;
    VertexId v = -1;  // always u < v
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(VertexId a, VertexId b) {
    if (a == b) throw std::invalid_argument("degenerate edge");
    return a < b ? Edge{a, b} : Edge{b, a};
}

/// True iff uv is an edge of some induced 4-cycle, i.e. there are x adjacent
/// to v but not u and y adjacent to u but not v with xy an edge (then
/// u-v-x-y is a chordless 4-cycle). Pre: uv is an edge.
bool edge_in_induced_c4(const SimplicialComplex& k, Edge e);

/// Edges lying on no induced 4-cycle (the contractible ones), sorted.
std::vector<Edge> c4_free_edges(const SimplicialComplex& k);

/// Contract uv by replacing v with u in every facet (v's slot is removed and
/// higher ids shift down by one). Pre: uv is an edge.
SimplicialComplex contract_edge(const SimplicialComplex& k, Edge e);

/// Stellar subdivision of the edge uv: a fresh vertex (id n) replaces uv,
/// and each facet containing uv splits in two. Pre: uv is an edge.
SimplicialComplex stellar_subdivide_edge(const SimplicialComplex& k, Edge e);

/// Split u into u and a fresh vertex v (id n): v picks up the neighbors in
/// b plus u itself, u keeps the neighbors in a plus v, and the result is the
/// clique complex of the modified graph. Pre: a ∪ b = N(u). The caller
/// validates the result (a bad split simply fails certification).
SimplicialComplex vertex_split(const SimplicialComplex& k, VertexId u,
                               const Face& a, const Face& b);

/// Replayable recipe: start from the octahedral (d-1)-sphere and subdivide
/// the recorded edges in order (ids as of each step; new vertices take the
/// next free id).
struct SubdivisionScript {
    int d = 0;
    bool seeded = false;
    uint64_t seed = 0;
    std::vector<Edge> steps;
};

SimplicialComplex replay_script(const SubdivisionScript& s);

/// Seeded random member of the subdivision family: `steps` uniform random
/// edge subdivisions starting from octahedral_sphere(d). Deterministic for a
/// fixed seed.
std::pair<SimplicialComplex, SubdivisionScript> generate_family_s(
    int d, int steps, uint64_t seed);

/// Every edge lies on an induced 4-cycle (no contractions available) and the
/// complex is not octahedral. Pre: k is a verified flag homology sphere.
bool is_minimal_r(const SimplicialComplex& k);

struct GammaIdentityCheck {
    bool pass = false;
    IntPolynomial lhs;  // gamma of the input
    IntPolynomial rhs;
    IntPolynomial gamma_transformed;  // contracted complex / suspension
    IntPolynomial gamma_edge_link;    // contraction check only
};

/// gamma(K) = gamma(K/e) + t * gamma(lk_e K). Errors ("contraction not
/// admissible") when e lies on an induced 4-cycle.
GammaIdentityCheck contraction_gamma_check(const SimplicialComplex& k, Edge e);

/// gamma(susp K) = gamma(K).
GammaIdentityCheck suspension_gamma_check(const SimplicialComplex& k);

}  // namespace flagsphere
