#include "flagsphere/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagsphere {

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph vertex count out of range");
}

void Graph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    adj_[u].insert(v);
    adj_[v].insert(u);
}

void Graph::remove_edge(VertexId u, VertexId v) {
    adj_[u].erase(v);
    adj_[v].erase(u);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return adj_[u].contains(v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId u = 0; u < n_; ++u)
        adj_[u].for_each([&](VertexId v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

long long Graph::edge_count() const {
    long long deg = 0;
    for (VertexId u = 0; u < n_; ++u) deg += adj_[u].size();
    return deg / 2;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (VertexId u = 0; u < n_; ++u)
        for (VertexId v = u + 1; v < n_; ++v)
            if (!adj_[u].contains(v)) g.add_edge(u, v);
    return g;
}

namespace {

void bron_kerbosch(const std::vector<Face>& adj, Face r, Face p, Face x,
                   std::vector<Face>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // pivot: vertex of P∪X with the most neighbors in P
    VertexId pivot = -1;
    int best = -1;
    p.unite(x).for_each([&](VertexId u) {
        int c = p.intersect(adj[u]).size();
        if (c > best) {
            best = c;
            pivot = u;
        }
    });
    Face candidates = pivot >= 0 ? p.minus(adj[pivot]) : p;
    candidates.for_each([&](VertexId v) {
        bron_kerbosch(adj, r.with(v), p.intersect(adj[v]), x.intersect(adj[v]),
                      out);
        p.erase(v);
        x.insert(v);
    });
}

}  // namespace

std::vector<Face> Graph::maximal_cliques() const {
    std::vector<Face> out;
    bron_kerbosch(adj_, Face{}, Face::full(n_), Face{}, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace flagsphere
