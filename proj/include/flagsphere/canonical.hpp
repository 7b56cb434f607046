#pragma once

#include <string>
#include <vector>

#include "flagsphere/complex.hpp"

namespace flagsphere {

/// Canonical relabeling of a complex, computed on its support (ghost
/// vertices are ignored, so isomorphism is a property of the face set
/// alone). Two complexes are isomorphic iff their canonical facet lists are
/// equal.
///
/// Method: iterated color refinement on the 1-skeleton seeded with
/// facet-incidence signatures, followed by individualization backtracking;
/// the canonical form is the lexicographically smallest relabeled facet list
/// over all refinement leaves.
struct CanonicalForm {
    int m = 0;                          // support size
    std::vector<Face> facets;           // relabeled to 0..m-1, sorted
    std::vector<VertexId> vertex_order; // original vertex at canonical slot i
};

CanonicalForm canonical_form(const SimplicialComplex& k);

/// Compact encoding of canonical_form(k).facets — usable as a hash/map key.
std::string canonical_key(const SimplicialComplex& k);

bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace flagsphere
