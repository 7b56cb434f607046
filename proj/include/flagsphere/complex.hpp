#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "flagsphere/face.hpp"
#include "flagsphere/graph.hpp"

namespace flagsphere {

/// Abstract simplicial complex, represented by its facet list (source of
/// truth). Immutable after construction; copies share state. The full face
/// enumeration and the 1-skeleton are computed on demand and memoized
/// race-free.
///
/// Every complex contains the empty face; the "empty complex" {∅} is
/// represented by the single facet ∅ on zero vertices. Subcomplex operations
/// (link, star, antistar, induced) keep the ambient vertex numbering of their
/// parent so results can be compared face-for-face.
class SimplicialComplex {
public:
    /// Normalizing constructor: deduplicates, drops non-maximal faces, and
    /// compacts vertex ids to 0..n-1 (original ids kept as labels when the
    /// input was not already compact). Errors on empty input; the empty
    /// complex is spelled from_facets({Face{}}).
    static SimplicialComplex from_facets(std::vector<Face> faces,
                                         std::vector<std::string> labels = {});

    SimplicialComplex();  // the empty complex {∅}

    int n() const;    // ambient vertex count
    int dim() const;  // max facet cardinality - 1 (the empty complex has dim -1)
    const std::vector<Face>& facets() const;

    /// Human label of a vertex ("0", "1", ... unless the source supplied
    /// labels).
    std::string label(VertexId v) const;
    bool has_custom_labels() const;

    bool is_face(const Face& f) const;
    bool is_pure() const;
    Face support() const;  // union of facets

    /// All faces, bucketed by cardinality (index 0 holds the empty face) and
    /// sorted within each bucket. Memoized; errors when the total face count
    /// exceeds the hard enumeration cap.
    const std::vector<std::vector<Face>>& faces_by_card() const;
    long long face_count() const;

    /// f_{i-1} = number of faces of cardinality i (f_{-1} = 1).
    std::vector<long long> f_vector() const;

    const Graph& one_skeleton() const;  // memoized

    SimplicialComplex link(const Face& f) const;      // error when f is not a face
    SimplicialComplex star(const Face& f) const;      // error when f is not a face
    SimplicialComplex antistar(const Face& f) const;  // error when f is not a face
    SimplicialComplex induced(const Face& w) const;

    /// Facet-set equality (labels and ambient numbering width are ignored).
    bool operator==(const SimplicialComplex& o) const;

    /// Boundary complex of the d-dimensional cross-polytope: the d-fold join
    /// of the two-point complex. Vertices 2i, 2i+1 are the antipodal pairs;
    /// 2^d facets. Errors for d < 1.
    static SimplicialComplex octahedral_sphere(int d);

    /// Cycle complex on m >= 3 vertices (0-1-...-(m-1)-0).
    static SimplicialComplex cycle(int m);

    /// Internal-use constructor: takes facets as-is modulo normalization,
    /// without vertex compaction. `labels` may be empty (identity labels).
    static SimplicialComplex raw(int n, std::vector<Face> facets,
                                 std::vector<std::string> labels = {});

private:
    struct Core;
    explicit SimplicialComplex(std::shared_ptr<const Core> core);
    std::shared_ptr<const Core> core_;
};

/// Join with disjointness enforced by relabeling: b's vertices are shifted
/// past a's.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Cone with a fresh apex (id n).
SimplicialComplex cone(const SimplicialComplex& k);

/// Suspension with fresh apexes (ids n, n+1).
SimplicialComplex suspension(const SimplicialComplex& k);

/// Clique complex of a graph (vertices of the graph are the 0-faces).
SimplicialComplex clique_complex(const Graph& g);

/// A complex is flag when it equals the clique complex of its 1-skeleton.
bool is_flag(const SimplicialComplex& k);

/// True iff k equals the boundary of a cross-polytope on its own vertex set:
/// flag, n even and positive, and every vertex non-adjacent to exactly one
/// other.
bool is_octahedral(const SimplicialComplex& k);

}  // namespace flagsphere
