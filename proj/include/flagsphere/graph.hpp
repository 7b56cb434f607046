#pragma once

#include <utility>
#include <vector>

#include "flagsphere/face.hpp"

namespace flagsphere {

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
public:
    explicit Graph(int n = 0);

    int n() const { return n_; }

    void add_edge(VertexId u, VertexId v);
    void remove_edge(VertexId u, VertexId v);
    bool has_edge(VertexId u, VertexId v) const;

    const Face& neighbors(VertexId v) const { return adj_[v]; }
    int degree(VertexId v) const { return adj_[v].size(); }

    /// All edges as (u, v) with u < v, sorted.
    std::vector<std::pair<VertexId, VertexId>> edges() const;
    long long edge_count() const;

    /// Complement on the same vertex set (no self-loops).
    Graph complement() const;

    /// Maximal cliques (Bron–Kerbosch with pivoting), sorted. Isolated
    /// vertices appear as singleton cliques; the empty graph on zero
    /// vertices yields the single empty clique.
    std::vector<Face> maximal_cliques() const;

    bool operator==(const Graph&) const = default;

private:
    int n_;
    std::vector<Face> adj_;
};

}  // namespace flagsphere
