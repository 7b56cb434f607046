#include "flagsphere/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace flagsphere {

namespace {

// Hard guard against pathological inputs; the homology layer applies its own
// (smaller, configurable) cap on top of this.
constexpr long long kFaceEnumerationCap = 4'000'000;
constexpr int kMaxFacetCardForEnumeration = 22;

std::vector<Face> normalize_facets(std::vector<Face> fs) {
    std::sort(fs.begin(), fs.end(),
              [](const Face& a, const Face& b) { return a.size() > b.size(); });
    std::vector<Face> keep;
    keep.reserve(fs.size());
    for (const Face& f : fs) {
        bool dominated = false;
        for (const Face& g : keep)
            if (f.subset_of(g)) {
                dominated = true;
                break;
            }
        if (!dominated) keep.push_back(f);
    }
    std::sort(keep.begin(), keep.end());
    return keep;
}

Face shift_face(const Face& f, int offset) {
    Face out;
    f.for_each([&](VertexId v) { out.insert(v + offset); });
    return out;
}

}  // namespace

struct SimplicialComplex::Core {
    int n = 0;
    int dim = -1;
    std::vector<Face> facets;         // sorted, maximal, deduplicated
    std::vector<std::string> labels;  // empty => identity labels

    mutable std::once_flag faces_flag;
    mutable std::vector<std::vector<Face>> faces_by_card;

    mutable std::once_flag skeleton_flag;
    mutable std::unique_ptr<Graph> skeleton;
};

SimplicialComplex::SimplicialComplex(std::shared_ptr<const Core> core)
    : core_(std::move(core)) {}

SimplicialComplex::SimplicialComplex() {
    auto core = std::make_shared<Core>();
    core->n = 0;
    core->dim = -1;
    core->facets = {Face{}};
    core_ = std::move(core);
}

SimplicialComplex SimplicialComplex::raw(int n, std::vector<Face> facets,
                                         std::vector<std::string> labels) {
    if (facets.empty())
        throw std::invalid_argument("empty complex: no facets given");
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range");
    auto core = std::make_shared<Core>();
    core->facets = normalize_facets(std::move(facets));
    core->n = n;
    core->dim = -1;
    for (const Face& f : core->facets) {
        if (f.max_vertex() >= n)
            throw std::invalid_argument("facet vertex outside ambient range");
        core->dim = std::max(core->dim, f.size() - 1);
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("label table size mismatch");
    core->labels = std::move(labels);
    return SimplicialComplex(std::move(core));
}

SimplicialComplex SimplicialComplex::from_facets(
    std::vector<Face> faces, std::vector<std::string> labels) {
    if (faces.empty())
        throw std::invalid_argument("empty complex: no facets given");
    std::vector<Face> normalized = normalize_facets(std::move(faces));

    Face support;
    for (const Face& f : normalized) support = support.unite(f);
    std::vector<VertexId> old_ids = support.vertices();
    int m = static_cast<int>(old_ids.size());

    bool identity = (support == Face::full(m));
    std::vector<std::string> out_labels;
    if (!labels.empty()) {
        std::unordered_map<std::string, int> seen;
        out_labels.reserve(m);
        for (VertexId v : old_ids) {
            if (v >= static_cast<int>(labels.size()))
                throw std::invalid_argument("missing label for vertex " +
                                            std::to_string(v));
            if (!seen.emplace(labels[v], v).second)
                throw std::invalid_argument("duplicate vertex label \"" +
                                            labels[v] + "\"");
            out_labels.push_back(labels[v]);
        }
    } else if (!identity) {
        // keep the original ids around as labels
        out_labels.reserve(m);
        for (VertexId v : old_ids) out_labels.push_back(std::to_string(v));
    }

    if (!identity) {
        std::array<int, kMaxVertices> remap{};
        for (int i = 0; i < m; ++i) remap[old_ids[i]] = i;
        for (Face& f : normalized) {
            Face g;
            f.for_each([&](VertexId v) { g.insert(remap[v]); });
            f = g;
        }
        std::sort(normalized.begin(), normalized.end());
    }
    return raw(m, std::move(normalized), std::move(out_labels));
}

int SimplicialComplex::n() const { return core_->n; }
int SimplicialComplex::dim() const { return core_->dim; }
const std::vector<Face>& SimplicialComplex::facets() const {
    return core_->facets;
}

std::string SimplicialComplex::label(VertexId v) const {
    if (v < 0 || v >= core_->n)
        throw std::invalid_argument("vertex out of range");
    if (core_->labels.empty()) return std::to_string(v);
    return core_->labels[v];
}

bool SimplicialComplex::has_custom_labels() const {
    return !core_->labels.empty();
}

bool SimplicialComplex::is_face(const Face& f) const {
    for (const Face& g : core_->facets)
        if (f.subset_of(g)) return true;
    return false;
}

bool SimplicialComplex::is_pure() const {
    for (const Face& f : core_->facets)
        if (f.size() != core_->dim + 1) return false;
    return true;
}

Face SimplicialComplex::support() const {
    Face s;
    for (const Face& f : core_->facets) s = s.unite(f);
    return s;
}

const std::vector<std::vector<Face>>& SimplicialComplex::faces_by_card() const {
    std::call_once(core_->faces_flag, [this] {
        std::unordered_set<Face, FaceHash> all;
        for (const Face& facet : core_->facets) {
            std::vector<VertexId> vs = facet.vertices();
            int s = static_cast<int>(vs.size());
            if (s > kMaxFacetCardForEnumeration)
                throw std::runtime_error(
                    "face enumeration cap exceeded: facet with " +
                    std::to_string(s) + " vertices");
            for (uint64_t mask = 0; mask < (uint64_t{1} << s); ++mask) {
                Face sub;
                for (int b = 0; b < s; ++b)
                    if ((mask >> b) & 1u) sub.insert(vs[b]);
                all.insert(sub);
            }
            if (static_cast<long long>(all.size()) > kFaceEnumerationCap)
                throw std::runtime_error(
                    "face enumeration cap exceeded: more than " +
                    std::to_string(kFaceEnumerationCap) + " faces");
        }
        auto& buckets = core_->faces_by_card;
        buckets.assign(core_->dim + 2, {});
        for (const Face& f : all) buckets[f.size()].push_back(f);
        for (auto& bucket : buckets) std::sort(bucket.begin(), bucket.end());
    });
    return core_->faces_by_card;
}

long long SimplicialComplex::face_count() const {
    long long total = 0;
    for (const auto& bucket : faces_by_card()) total += bucket.size();
    return total;
}

std::vector<long long> SimplicialComplex::f_vector() const {
    std::vector<long long> f;
    for (const auto& bucket : faces_by_card()) f.push_back(bucket.size());
    return f;
}

const Graph& SimplicialComplex::one_skeleton() const {
    std::call_once(core_->skeleton_flag, [this] {
        auto g = std::make_unique<Graph>(core_->n);
        for (const Face& facet : core_->facets) {
            std::vector<VertexId> vs = facet.vertices();
            for (size_t i = 0; i < vs.size(); ++i)
                for (size_t j = i + 1; j < vs.size(); ++j)
                    g->add_edge(vs[i], vs[j]);
        }
        core_->skeleton = std::move(g);
    });
    return *core_->skeleton;
}

SimplicialComplex SimplicialComplex::link(const Face& f) const {
    if (!is_face(f)) throw std::invalid_argument("not a face: " + f.to_string());
    std::vector<Face> out;
    for (const Face& g : core_->facets)
        if (f.subset_of(g)) out.push_back(g.minus(f));
    return raw(core_->n, std::move(out), core_->labels);
}

SimplicialComplex SimplicialComplex::star(const Face& f) const {
    if (!is_face(f)) throw std::invalid_argument("not a face: " + f.to_string());
    std::vector<Face> out;
    for (const Face& g : core_->facets)
        if (f.subset_of(g)) out.push_back(g);
    return raw(core_->n, std::move(out), core_->labels);
}

SimplicialComplex SimplicialComplex::antistar(const Face& f) const {
    if (f.empty())
        throw std::invalid_argument(
            "antistar of the empty face is the void complex");
    if (!is_face(f)) throw std::invalid_argument("not a face: " + f.to_string());
    std::vector<Face> out;
    for (const Face& g : core_->facets) {
        if (!f.subset_of(g)) {
            out.push_back(g);
        } else {
            f.for_each([&](VertexId v) { out.push_back(g.without(v)); });
        }
    }
    return raw(core_->n, std::move(out), core_->labels);
}

SimplicialComplex SimplicialComplex::induced(const Face& w) const {
    std::vector<Face> out;
    for (const Face& g : core_->facets) out.push_back(g.intersect(w));
    return raw(core_->n, std::move(out), core_->labels);
}

bool SimplicialComplex::operator==(const SimplicialComplex& o) const {
    return core_->facets == o.core_->facets;
}

SimplicialComplex SimplicialComplex::octahedral_sphere(int d) {
    if (d < 1)
        throw std::invalid_argument("octahedral sphere requires d >= 1");
    if (2 * d > kMaxVertices)
        throw std::invalid_argument("octahedral sphere too large");
    std::vector<Face> facets;
    facets.reserve(uint64_t{1} << d);
    for (uint64_t mask = 0; mask < (uint64_t{1} << d); ++mask) {
        Face f;
        for (int i = 0; i < d; ++i) f.insert(2 * i + ((mask >> i) & 1u));
        facets.push_back(f);
    }
    return raw(2 * d, std::move(facets));
}

SimplicialComplex SimplicialComplex::cycle(int m) {
    if (m < 3) throw std::invalid_argument("cycle requires at least 3 vertices");
    std::vector<Face> facets;
    facets.reserve(m);
    for (int i = 0; i < m; ++i) facets.push_back(Face{i, (i + 1) % m});
    return raw(m, std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<Face> facets;
    facets.reserve(a.facets().size() * b.facets().size());
    for (const Face& fa : a.facets())
        for (const Face& fb : b.facets())
            facets.push_back(fa.unite(shift_face(fb, a.n())));

    std::vector<std::string> labels;
    if (a.has_custom_labels() || b.has_custom_labels()) {
        std::unordered_set<std::string> used;
        auto push_unique = [&](std::string s) {
            while (!used.insert(s).second) s += "'";
            labels.push_back(std::move(s));
        };
        for (int v = 0; v < a.n(); ++v) push_unique(a.label(v));
        for (int v = 0; v < b.n(); ++v) push_unique(b.label(v));
    }
    return SimplicialComplex::raw(a.n() + b.n(), std::move(facets),
                                  std::move(labels));
}

SimplicialComplex cone(const SimplicialComplex& k) {
    return join(k, SimplicialComplex::raw(1, {Face{0}}));
}

SimplicialComplex suspension(const SimplicialComplex& k) {
    return join(k, SimplicialComplex::raw(2, {Face{0}, Face{1}}));
}

SimplicialComplex clique_complex(const Graph& g) {
    return SimplicialComplex::raw(g.n(), g.maximal_cliques());
}

bool is_flag(const SimplicialComplex& k) {
    return clique_complex(k.one_skeleton()) == k;
}

bool is_octahedral(const SimplicialComplex& k) {
    const int n = k.n();
    if (n < 2 || n % 2 != 0) return false;
    const Graph& g = k.one_skeleton();
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) != n - 2) return false;
    return is_flag(k);
}

}  // namespace flagsphere
