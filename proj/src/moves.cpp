#include "flagsphere/moves.hpp"

#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "flagsphere/vectors.hpp"

namespace flagsphere {

namespace {

void require_edge(const SimplicialComplex& k, Edge e) {
    if (e.u < 0 || e.v >= k.n() || e.u >= e.v ||
        !k.one_skeleton().has_edge(e.u, e.v))
        throw std::invalid_argument("not an edge of the complex: {" +
                                    std::to_string(e.u) + "," +
                                    std::to_string(e.v) + "}");
}

/// Uniform draw from [0, n). std::uniform_int_distribution is
/// implementation-defined, which would break cross-platform replay of seeded
/// scripts, so we roll rejection sampling on the raw engine output.
uint64_t bounded_draw(std::mt19937_64& rng, uint64_t n) {
    if (n == 0) throw std::logic_error("draw from empty range");
    const uint64_t limit =
        std::numeric_limits<uint64_t>::max() -
        std::numeric_limits<uint64_t>::max() % n;
    uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

}  // namespace

bool edge_in_induced_c4(const SimplicialComplex& k, Edge e) {
    require_edge(k, e);
    const Graph& g = k.one_skeleton();
    // u-v-x-y-u chordless: x sees v but not u, y sees u but not v, xy an edge
    Face xs = g.neighbors(e.v).minus(g.neighbors(e.u)).without(e.u);
    Face ys = g.neighbors(e.u).minus(g.neighbors(e.v)).without(e.v);
    if (xs.empty() || ys.empty()) return false;
    bool found = false;
    xs.for_each([&](VertexId x) {
        if (!found && g.neighbors(x).intersects(ys)) found = true;
    });
    return found;
}

std::vector<Edge> c4_free_edges(const SimplicialComplex& k) {
    std::vector<Edge> out;
    for (auto [u, v] : k.one_skeleton().edges()) {
        Edge e{u, v};
        if (!edge_in_induced_c4(k, e)) out.push_back(e);
    }
    return out;
}

SimplicialComplex contract_edge(const SimplicialComplex& k, Edge e) {
    require_edge(k, e);
    std::vector<Face> out;
    out.reserve(k.facets().size());
    for (const Face& f : k.facets()) {
        Face g = f.contains(e.v) ? f.without(e.v).with(e.u) : f;
        Face shifted;  // close the id gap left by v
        g.for_each([&](VertexId x) { shifted.insert(x > e.v ? x - 1 : x); });
        out.push_back(shifted);
    }
    std::vector<std::string> labels;
    if (k.has_custom_labels()) {
        labels.reserve(k.n() - 1);
        for (VertexId x = 0; x < k.n(); ++x)
            if (x != e.v) labels.push_back(k.label(x));
    }
    return SimplicialComplex::raw(k.n() - 1, std::move(out), std::move(labels));
}

SimplicialComplex stellar_subdivide_edge(const SimplicialComplex& k, Edge e) {
    require_edge(k, e);
    const VertexId w = k.n();
    const Face uv{e.u, e.v};
    std::vector<Face> out;
    out.reserve(k.facets().size() * 2);
    for (const Face& f : k.facets()) {
        if (uv.subset_of(f)) {
            out.push_back(f.without(e.u).with(w));
            out.push_back(f.without(e.v).with(w));
        } else {
            out.push_back(f);
        }
    }
    std::vector<std::string> labels;
    if (k.has_custom_labels()) {
        labels.reserve(k.n() + 1);
        std::unordered_set<std::string> used;
        for (VertexId x = 0; x < k.n(); ++x) {
            labels.push_back(k.label(x));
            used.insert(labels.back());
        }
        std::string fresh = std::to_string(w);
        while (used.count(fresh)) fresh += "'";
        labels.push_back(std::move(fresh));
    }
    return SimplicialComplex::raw(k.n() + 1, std::move(out), std::move(labels));
}

SimplicialComplex vertex_split(const SimplicialComplex& k, VertexId u,
                               const Face& a, const Face& b) {
    if (u < 0 || u >= k.n())
        throw std::invalid_argument("split vertex out of range");
    const Graph& g = k.one_skeleton();
    if (a.unite(b) != g.neighbors(u))
        throw std::invalid_argument("split parts must cover the neighborhood");
    if (a.contains(u) || b.contains(u))
        throw std::invalid_argument("split parts must not contain the vertex");
    const VertexId v = k.n();
    Graph h(k.n() + 1);
    for (auto [x, y] : g.edges())
        if (x != u && y != u) h.add_edge(x, y);
    a.for_each([&](VertexId x) { h.add_edge(u, x); });
    b.for_each([&](VertexId x) { h.add_edge(v, x); });
    h.add_edge(u, v);
    return clique_complex(h);
}

SimplicialComplex replay_script(const SubdivisionScript& s) {
    SimplicialComplex k = SimplicialComplex::octahedral_sphere(s.d);
    for (Edge e : s.steps) k = stellar_subdivide_edge(k, e);
    return k;
}

std::pair<SimplicialComplex, SubdivisionScript> generate_family_s(
    int d, int steps, uint64_t seed) {
    if (steps < 0) throw std::invalid_argument("negative step count");
    SubdivisionScript script;
    script.d = d;
    script.seeded = true;
    script.seed = seed;
    std::mt19937_64 rng(seed);
    SimplicialComplex k = SimplicialComplex::octahedral_sphere(d);
    for (int i = 0; i < steps; ++i) {
        auto edges = k.one_skeleton().edges();
        auto [u, v] = edges[bounded_draw(rng, edges.size())];
        Edge e = make_edge(u, v);
        script.steps.push_back(e);
        k = stellar_subdivide_edge(k, e);
    }
    return {std::move(k), std::move(script)};
}

bool is_minimal_r(const SimplicialComplex& k) {
    return c4_free_edges(k).empty() && !is_octahedral(k);
}

GammaIdentityCheck contraction_gamma_check(const SimplicialComplex& k,
                                           Edge e) {
    require_edge(k, e);
    if (edge_in_induced_c4(k, e))
        throw std::domain_error(
            "contraction not admissible: edge {" + std::to_string(e.u) + "," +
            std::to_string(e.v) + "} lies on an induced 4-cycle");
    GammaIdentityCheck out;
    out.lhs = gamma_polynomial(k);
    out.gamma_transformed = gamma_polynomial(contract_edge(k, e));
    out.gamma_edge_link = gamma_polynomial(k.link(Face{e.u, e.v}));
    out.rhs = out.gamma_transformed + out.gamma_edge_link.shifted(1);
    out.pass = (out.lhs == out.rhs);
    return out;
}

GammaIdentityCheck suspension_gamma_check(const SimplicialComplex& k) {
    GammaIdentityCheck out;
    out.lhs = gamma_polynomial(k);
    out.gamma_transformed = gamma_polynomial(suspension(k));
    out.rhs = out.gamma_transformed;
    out.pass = (out.lhs == out.rhs);
    return out;
}

}  // namespace flagsphere
