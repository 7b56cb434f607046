#include "flagsphere/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace flagsphere {

namespace {

struct LocalComplex {
    int m = 0;
    std::vector<Face> facets;                     // local ids 0..m-1
    std::vector<Face> adj;                        // 1-skeleton rows
    std::vector<std::vector<int>> vertex_facets;  // facet indices per vertex
    std::vector<VertexId> original;               // local -> original id
};

LocalComplex localize(const SimplicialComplex& k) {
    LocalComplex lc;
    lc.original = k.support().vertices();
    lc.m = static_cast<int>(lc.original.size());
    std::array<int, kMaxVertices> remap{};
    for (int i = 0; i < lc.m; ++i) remap[lc.original[i]] = i;

    lc.adj.assign(lc.m, Face{});
    lc.vertex_facets.assign(lc.m, {});
    for (const Face& f : k.facets()) {
        Face g;
        f.for_each([&](VertexId v) { g.insert(remap[v]); });
        int idx = static_cast<int>(lc.facets.size());
        lc.facets.push_back(g);
        std::vector<VertexId> vs = g.vertices();
        for (size_t i = 0; i < vs.size(); ++i) {
            lc.vertex_facets[vs[i]].push_back(idx);
            for (size_t j = i + 1; j < vs.size(); ++j) {
                lc.adj[vs[i]].insert(vs[j]);
                lc.adj[vs[j]].insert(vs[i]);
            }
        }
    }
    return lc;
}

int count_classes(const std::vector<int>& colors) {
    int c = 0;
    for (int x : colors) c = std::max(c, x + 1);
    return c;
}

/// One full round of color refinement: vertices are re-ranked by
/// (current color, sorted neighbor colors, sorted facet color signatures)
/// until the partition stabilizes.
void refine(const LocalComplex& lc, std::vector<int>& colors) {
    int classes = count_classes(colors);
    while (classes < lc.m) {
        std::vector<std::vector<int>> facet_sig(lc.facets.size());
        for (size_t i = 0; i < lc.facets.size(); ++i) {
            std::vector<int>& sig = facet_sig[i];
            lc.facets[i].for_each([&](VertexId v) { sig.push_back(colors[v]); });
            std::sort(sig.begin(), sig.end());
        }
        std::vector<std::vector<int>> keys(lc.m);
        for (int v = 0; v < lc.m; ++v) {
            std::vector<int>& key = keys[v];
            key.push_back(colors[v]);
            key.push_back(-1);
            std::vector<int> nb;
            lc.adj[v].for_each([&](VertexId u) { nb.push_back(colors[u]); });
            std::sort(nb.begin(), nb.end());
            key.insert(key.end(), nb.begin(), nb.end());
            key.push_back(-1);
            std::vector<std::vector<int>> sigs;
            for (int fi : lc.vertex_facets[v]) sigs.push_back(facet_sig[fi]);
            std::sort(sigs.begin(), sigs.end());
            for (const auto& s : sigs) {
                key.push_back(-2);
                key.insert(key.end(), s.begin(), s.end());
            }
        }
        std::map<std::vector<int>, int> rank;
        for (int v = 0; v < lc.m; ++v) rank.emplace(keys[v], 0);
        int next = 0;
        for (auto& [key, r] : rank) r = next++;
        for (int v = 0; v < lc.m; ++v) colors[v] = rank[keys[v]];
        if (next == classes) break;
        classes = next;
    }
}

struct Canonicalizer {
    const LocalComplex& lc;
    bool have_best = false;
    std::vector<Face> best;
    std::vector<int> best_position;  // local vertex -> canonical slot

    explicit Canonicalizer(const LocalComplex& c) : lc(c) {}

    void run() {
        std::vector<int> colors(lc.m, 0);
        recurse(std::move(colors));
    }

    void recurse(std::vector<int> colors) {
        refine(lc, colors);
        int classes = count_classes(colors);
        if (classes == lc.m) {
            leaf(colors);
            return;
        }
        // first color value held by more than one vertex
        std::vector<int> size_of(classes, 0);
        for (int c : colors) ++size_of[c];
        int target = 0;
        while (size_of[target] < 2) ++target;
        for (int v = 0; v < lc.m; ++v) {
            if (colors[v] != target) continue;
            std::vector<int> next(colors);
            // split v off at the front of its class
            for (int u = 0; u < lc.m; ++u)
                if (next[u] > target || (next[u] == target && u != v)) ++next[u];
            recurse(std::move(next));
        }
    }

    void leaf(const std::vector<int>& colors) {
        std::vector<Face> cand(lc.facets.size());
        for (size_t i = 0; i < lc.facets.size(); ++i) {
            Face g;
            lc.facets[i].for_each([&](VertexId v) { g.insert(colors[v]); });
            cand[i] = g;
        }
        std::sort(cand.begin(), cand.end());
        if (!have_best ||
            std::lexicographical_compare(cand.begin(), cand.end(),
                                         best.begin(), best.end())) {
            best = std::move(cand);
            best_position = colors;
            have_best = true;
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const SimplicialComplex& k) {
    LocalComplex lc = localize(k);
    CanonicalForm out;
    out.m = lc.m;
    if (lc.m == 0) {
        out.facets = lc.facets;  // just the empty face
        return out;
    }
    Canonicalizer cz(lc);
    cz.run();
    out.facets = std::move(cz.best);
    out.vertex_order.assign(lc.m, -1);
    for (int v = 0; v < lc.m; ++v)
        out.vertex_order[cz.best_position[v]] = lc.original[v];
    return out;
}

std::string canonical_key(const SimplicialComplex& k) {
    CanonicalForm cf = canonical_form(k);
    std::string s;
    s.reserve(cf.facets.size() * 8 + 4);
    s.push_back(static_cast<char>(cf.m));
    for (const Face& f : cf.facets) {
        f.for_each([&](VertexId v) { s.push_back(static_cast<char>(v + 1)); });
        s.push_back('\x7f');
    }
    return s;
}

bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.support().size() != b.support().size()) return false;
    if (a.facets().size() != b.facets().size()) return false;
    auto sizes = [](const SimplicialComplex& k) {
        std::vector<int> s;
        for (const Face& f : k.facets()) s.push_back(f.size());
        std::sort(s.begin(), s.end());
        return s;
    };
    if (sizes(a) != sizes(b)) return false;
    return canonical_key(a) == canonical_key(b);
}

}  // namespace flagsphere
