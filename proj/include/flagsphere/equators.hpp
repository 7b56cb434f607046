#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "flagsphere/complex.hpp"
#include "flagsphere/homology.hpp"
#include "flagsphere/moves.hpp"
#include "flagsphere/polynomial.hpp"

namespace flagsphere {

/// Caps for equator enumeration. The budget counts candidates examined
/// (vertex subsets, or search-tree nodes for the dimension-2 cycle search);
/// hitting it yields a partial, truncation-flagged result. Budget shares are
/// pre-allocated per work unit, so results and truncation points do not
/// depend on thread timing.
struct EquatorLimits {
    long long subset_budget = 2'000'000;
    int jobs = 1;
};

/// An equator: an induced subcomplex that is a homology sphere of
/// codimension 1. E keeps the ambient vertex numbering of K.
struct EquatorRecord {
    Face w;
    SimplicialComplex e;
    std::optional<VertexId> is_vertex_link;  // smallest v with lk_v = E
    IntPolynomial gamma_e;
};

struct EquatorEnumeration {
    std::vector<EquatorRecord> records;  // sorted by w
    bool truncated = false;
    long long candidates_examined = 0;
};

/// All vertex subsets (within limits) whose induced subcomplex certifies as
/// a homology sphere of dimension dim(K)-1. For dim K = 2 this enumerates
/// induced cycles of length >= 4 directly; otherwise subsets are scanned by
/// increasing size with necessary-condition pruning (dimension, purity,
/// minimum degree — each provably necessary for induced flag subcomplexes of
/// a flag complex).
EquatorEnumeration enumerate_equators(const SimplicialComplex& k,
                                      const HomologyOptions& opt = {},
                                      const EquatorLimits& limits = {});

/// Smallest non-adjacent pair (a, b) with lk_a = lk_b = induced(K, V∖{a,b}),
/// if any: the suspension apexes.
std::optional<std::pair<VertexId, VertexId>> is_suspension(
    const SimplicialComplex& k);

/// Smallest vertex whose link equals e (facet-for-facet, both in K's
/// numbering), if any.
std::optional<VertexId> classify_vertex_link(const SimplicialComplex& k,
                                             const SimplicialComplex& e);

/// The two closed sides K is cut into by the equator induced(K, w): facets
/// are grouped by ridge-connectivity where crossing a ridge inside w is
/// forbidden.
struct BallDecomposition {
    SimplicialComplex b1;
    SimplicialComplex b2;
    SimplicialComplex e;
    int interior1 = 0;  // vertices of b1 outside w
    int interior2 = 0;
};

/// Errors unless the cut yields exactly two sides (it must, when induced(K,w)
/// is a certified equator of a homology sphere).
BallDecomposition ball_decomposition(const SimplicialComplex& k,
                                     const Face& w);

/// Cap each side with a cone over the equator (fresh apexes n, n+1), certify
/// both caps as spheres, and verify the exact identities
///   gamma(K) = gamma(D1) + gamma(D2) - gamma(E)
///   f(K)     = f(D1) + f(D2) - f(suspension of E).
struct GammaDecompositionCheck {
    bool pass = false;
    bool delta1_sphere = false;
    bool delta2_sphere = false;
    bool gamma_identity = false;
    bool f_identity = false;
    IntPolynomial gamma_k;
    IntPolynomial gamma_d1;
    IntPolynomial gamma_d2;
    IntPolynomial gamma_e;
};

GammaDecompositionCheck gamma_decomposition_check(const SimplicialComplex& k,
                                                  const Face& w,
                                                  const HomologyOptions& opt = {});

/// gamma(lk_v) <= gamma(K) coefficientwise, for every vertex.
struct LinkConjectureCheck {
    bool pass = false;
    IntPolynomial gamma_k;
    std::vector<VertexId> violations;
};

LinkConjectureCheck link_conjecture_check(const SimplicialComplex& k);

/// gamma(E) <= gamma(K) coefficientwise over every enumerated equator.
struct EquatorConjectureCheck {
    bool pass = false;  // no violation found (within limits)
    bool truncated = false;
    long long equators_checked = 0;
    std::vector<Face> violations;
    IntPolynomial gamma_k;
};

EquatorConjectureCheck equator_conjecture_check(const SimplicialComplex& k,
                                                const HomologyOptions& opt = {},
                                                const EquatorLimits& limits = {});

/// The three structural alternatives for a flag homology sphere:
///   (0) it is a suspension;
///   (1) some edge lies on no induced 4-cycle (a contractible edge);
///   (2) every vertex avoids some equator that is not a vertex link.
/// Alternative 2 is only evaluated when 0 and 1 both fail (it needs the
/// equator enumeration). A vertex with at most two non-neighbors forces 0 or
/// 1; the verdict records whether that promise held.
struct StructureVerdict {
    std::optional<std::pair<VertexId, VertexId>> alt0;
    std::vector<Edge> alt1;
    std::vector<std::optional<Face>> alt2;  // per-vertex witness equator
    bool alt2_evaluated = false;
    bool alt2_holds = false;
    bool satisfied = false;
    bool truncated = false;
    std::optional<VertexId> few_nonneighbors_vertex;
    int fired_clause = -1;  // 0 / 1 when the fast path was confirmed
    bool fast_path_consistent = true;
};

StructureVerdict structure_check(const SimplicialComplex& k,
                                 const HomologyOptions& opt = {},
                                 const EquatorLimits& limits = {});

/// Dimension-2 dichotomy: either some vertex has at most two non-neighbors,
/// or every vertex avoids a non-link equator (an induced cycle that is no
/// vertex link). Errors when dim K != 2.
struct Dim2Check {
    bool pass = false;
    bool clause_i = false;
    std::optional<VertexId> clause_i_vertex;
    std::vector<std::optional<Face>> per_vertex_witness;
    bool truncated = false;
};

Dim2Check dim2_theorem_check(const SimplicialComplex& k,
                             const HomologyOptions& opt = {},
                             const EquatorLimits& limits = {});

}  // namespace flagsphere
