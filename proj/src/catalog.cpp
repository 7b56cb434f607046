#include "flagsphere/catalog.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "flagsphere/canonical.hpp"
#include "flagsphere/homology.hpp"

namespace flagsphere {

void Catalog::add(CatalogMember m) {
    for (const CatalogMember& existing : members_)
        if (existing.name == m.name)
            throw std::invalid_argument("duplicate catalog name: " + m.name);
    members_.push_back(std::move(m));
}

const CatalogMember* Catalog::find(const std::string& name) const {
    for (const CatalogMember& m : members_)
        if (m.name == name) return &m;
    return nullptr;
}

SimplicialComplex icosahedron() {
    // apex 0 over the cycle (1..5), apex 11 under the cycle (6..10), and an
    // antiprism band between the two cycles
    std::vector<std::vector<VertexId>> fs = {
        {0, 1, 2},  {0, 2, 3},  {0, 3, 4},  {0, 4, 5},  {0, 5, 1},
        {11, 6, 7}, {11, 7, 8}, {11, 8, 9}, {11, 9, 10}, {11, 10, 6},
        {1, 2, 7},  {2, 3, 8},  {3, 4, 9},  {4, 5, 10}, {5, 1, 6},
        {1, 6, 7},  {2, 7, 8},  {3, 8, 9},  {4, 9, 10}, {5, 10, 6}};
    std::vector<Face> facets;
    facets.reserve(fs.size());
    for (const auto& f : fs) facets.push_back(Face::from_vertices(f));
    return SimplicialComplex::from_facets(std::move(facets));
}

namespace {

/// Cyclic order of the link of u (whose facets must be the edges of a
/// single cycle). Deterministic: starts at the smallest link vertex and
/// walks toward its smaller neighbor.
std::vector<VertexId> link_cycle_order(const SimplicialComplex& k,
                                       VertexId u) {
    SimplicialComplex lk = k.link(Face{u});
    if (lk.dim() != 1)
        throw std::runtime_error("vertex link is not a cycle");
    std::vector<std::vector<VertexId>> adj(k.n());
    const Face support = lk.support();
    for (const Face& e : lk.facets()) {
        auto vs = e.vertices();
        adj[vs[0]].push_back(vs[1]);
        adj[vs[1]].push_back(vs[0]);
    }
    const VertexId start = support.min_vertex();
    std::vector<VertexId> order;
    VertexId prev = -1, cur = start;
    do {
        if (adj[cur].size() != 2)
            throw std::runtime_error("vertex link is not a cycle");
        order.push_back(cur);
        VertexId next = (prev < 0)
                            ? std::min(adj[cur][0], adj[cur][1])
                            : (adj[cur][0] == prev ? adj[cur][1] : adj[cur][0]);
        prev = cur;
        cur = next;
    } while (cur != start);
    if (static_cast<int>(order.size()) != support.size())
        throw std::runtime_error("vertex link is not a single cycle");
    return order;
}

}  // namespace

std::vector<SimplicialComplex> enumerate_flag_2spheres(int max_n) {
    std::vector<SimplicialComplex> out;
    if (max_n < 6) return out;
    std::vector<SimplicialComplex> layer{
        SimplicialComplex::octahedral_sphere(3)};
    out.push_back(layer.front());

    for (int n = 7; n <= max_n; ++n) {
        std::vector<std::pair<std::string, SimplicialComplex>> next;
        std::set<std::string> keys;
        for (const SimplicialComplex& k : layer) {
            for (VertexId u = 0; u < k.n(); ++u) {
                std::vector<VertexId> cyc = link_cycle_order(k, u);
                const int m = static_cast<int>(cyc.size());
                for (int p = 0; p < m; ++p) {
                    for (int q = p + 1; q < m; ++q) {
                        // pinch vertices adjacent along the link would give
                        // the new edge a triangle link (a clique of four)
                        if (q - p == 1 || (p == 0 && q == m - 1)) continue;
                        Face a, b;
                        for (int i = p;; i = (i + 1) % m) {
                            a.insert(cyc[i]);
                            if (i == q) break;
                        }
                        for (int i = q;; i = (i + 1) % m) {
                            b.insert(cyc[i]);
                            if (i == p) break;
                        }
                        SimplicialComplex s = vertex_split(k, u, a, b);
                        if (s.dim() != 2) continue;
                        if (is_homology_sphere(s).verdict !=
                            SphereVerdict::sphere)
                            continue;
                        std::string key = canonical_key(s);
                        if (keys.insert(key).second)
                            next.emplace_back(std::move(key), std::move(s));
                    }
                }
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        layer.clear();
        for (auto& [key, s] : next) {
            out.push_back(s);
            layer.push_back(std::move(s));
        }
    }
    return out;
}

Catalog builtin_catalog() {
    Catalog c;
    auto gen = [&](std::string name, SimplicialComplex k,
                   std::string provenance) {
        c.add({std::move(name), std::move(k), std::move(provenance),
               std::nullopt});
    };

    gen("cycle-5", SimplicialComplex::cycle(5), "generator:cycle(5)");
    gen("cycle-6", SimplicialComplex::cycle(6), "generator:cycle(6)");
    gen("cycle-8", SimplicialComplex::cycle(8), "generator:cycle(8)");
    for (int d = 2; d <= 5; ++d)
        gen("crosspolytope-" + std::to_string(d),
            SimplicialComplex::octahedral_sphere(d),
            "generator:octahedral_sphere(" + std::to_string(d) + ")");
    gen("icosahedron", icosahedron(), "generator:icosahedron");
    gen("susp-icosahedron", suspension(icosahedron()),
        "generator:suspension(icosahedron)");
    gen("subdivided-octahedron",
        stellar_subdivide_edge(SimplicialComplex::octahedral_sphere(3),
                               make_edge(0, 2)),
        "generator:subdivide(octahedral_sphere(3), {0,2})");

    struct Spec {
        int d;
        int steps;
        uint64_t seed;
    };
    const Spec specs[] = {{2, 4, 11}, {2, 6, 12}, {3, 3, 21},
                          {3, 5, 22}, {4, 2, 31}, {4, 4, 32}};
    for (const Spec& sp : specs) {
        auto [k, script] = generate_family_s(sp.d, sp.steps, sp.seed);
        CatalogMember m;
        m.name = "family-s-d" + std::to_string(sp.d) + "-steps" +
                 std::to_string(sp.steps) + "-seed" + std::to_string(sp.seed);
        m.complex = std::move(k);
        m.provenance = "script:family-s(d=" + std::to_string(sp.d) +
                       ", steps=" + std::to_string(sp.steps) +
                       ", seed=" + std::to_string(sp.seed) + ")";
        m.script = std::move(script);
        c.add(std::move(m));
    }
    return c;
}

}  // namespace flagsphere
