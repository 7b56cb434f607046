#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagsphere/complex.hpp"
#include "flagsphere/moves.hpp"

namespace flagsphere {

/// A named input to batch scans, with where it came from: a file path, a
/// generator descriptor, or a replayable subdivision script.
struct CatalogMember {
    std::string name;
    SimplicialComplex complex;
    std::string provenance;
    std::optional<SubdivisionScript> script;
};

class Catalog {
public:
    void add(CatalogMember m);  // errors on a duplicate name
    const std::vector<CatalogMember>& members() const { return members_; }
    const CatalogMember* find(const std::string& name) const;
    bool empty() const { return members_.empty(); }
    size_t size() const { return members_.size(); }

private:
    std::vector<CatalogMember> members_;
};

/// The icosahedron boundary: 12 vertices, 30 edges, 20 triangles, the flag
/// 2-sphere with gamma = (1, 6). Its graph has no induced 4-cycle at all, so
/// every edge is contractible; it is neither a suspension nor balanced.
SimplicialComplex icosahedron();

/// The standing test bed: cycles, cross-polytope boundaries, the
/// icosahedron and its suspension, a subdivided octahedron, and seeded
/// subdivision-family members across dimensions 2..4. Deterministic.
Catalog builtin_catalog();

/// All flag 2-spheres with at most max_n vertices, one per isomorphism
/// class, found by splitting vertices of the octahedron's descendants along
/// link-cycle arcs and deduplicating canonically. Sorted by vertex count,
/// then canonical key. (Every non-octahedral flag 2-sphere contracts to one
/// with fewer vertices, so the walk is exhaustive; the per-size counts are
/// pinned in the tests.)
std::vector<SimplicialComplex> enumerate_flag_2spheres(int max_n);

}  // namespace flagsphere
