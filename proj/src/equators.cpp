#include "flagsphere/equators.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "flagsphere/parallel.hpp"
#include "flagsphere/vectors.hpp"

namespace flagsphere {

namespace {

long long binomial_clamped(int n, int k) {
    static const Integer kMax = std::numeric_limits<long long>::max();
    Integer b = binomial(n, k);
    return b > kMax ? std::numeric_limits<long long>::max()
                    : static_cast<long long>(b);
}

std::optional<VertexId> find_link_vertex(
    const std::vector<SimplicialComplex>& links, const SimplicialComplex& e) {
    for (size_t v = 0; v < links.size(); ++v)
        if (links[v] == e) return static_cast<VertexId>(v);
    return std::nullopt;
}

EquatorRecord make_record(const std::vector<SimplicialComplex>& links,
                          SimplicialComplex e, const Face& w) {
    EquatorRecord r;
    r.w = w;
    r.is_vertex_link = find_link_vertex(links, e);
    r.gamma_e = gamma_polynomial(e);
    r.e = std::move(e);
    return r;
}

/// Certify one candidate vertex set. Rejections before the homology
/// certificate are all provably necessary conditions for induced(K, w) to be
/// a homology sphere of dimension target_dim: the dimension itself, purity,
/// and a minimum vertex degree (vertex links must again be spheres; for flag
/// input the induced complex is flag, which doubles the bound).
bool certify_candidate(const SimplicialComplex& k, const HomologyOptions& opt,
                       int target_dim, int min_degree, const Face& w,
                       std::optional<SimplicialComplex>& out) {
    int maxcard = 0;
    for (const Face& f : k.facets())
        maxcard = std::max(maxcard, f.intersect(w).size());
    if (maxcard != target_dim + 1) return false;

    SimplicialComplex e = k.induced(w);
    if (!e.is_pure()) return false;
    if (target_dim >= 1) {
        const Graph& ge = e.one_skeleton();
        bool degree_ok = true;
        w.for_each([&](VertexId v) {
            if (ge.degree(v) < min_degree) degree_ok = false;
        });
        if (!degree_ok) return false;
    }
    if (is_homology_sphere(e, opt).verdict != SphereVerdict::sphere)
        return false;
    out = std::move(e);
    return true;
}

struct WorkResult {
    std::vector<EquatorRecord> records;
    long long examined = 0;
    bool truncated = false;
};

// ---- general path: vertex subsets by (size, smallest vertex) ----

struct SubsetTask {
    int size = 0;
    VertexId first = 0;
    long long available = 0;
    long long quota = 0;
};

/// Lexicographically next size-|c| subset of {lo..hi-1}; false when done.
bool next_combination(std::vector<int>& c, int hi) {
    const int r = static_cast<int>(c.size());
    for (int i = r - 1; i >= 0; --i) {
        if (c[i] < hi - (r - i)) {
            ++c[i];
            for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

WorkResult run_subset_task(const SimplicialComplex& k,
                           const HomologyOptions& opt,
                           const std::vector<SimplicialComplex>& links,
                           int target_dim, int min_degree,
                           const SubsetTask& task) {
    WorkResult res;
    const int n = k.n();
    std::vector<int> rest(task.size - 1);
    for (int i = 0; i < task.size - 1; ++i) rest[i] = task.first + 1 + i;
    bool more = !rest.empty() || task.size == 1;
    for (; more; more = !rest.empty() && next_combination(rest, n)) {
        if (res.examined == task.quota) {
            res.truncated = true;
            return res;
        }
        ++res.examined;
        Face w;
        w.insert(task.first);
        for (int v : rest) w.insert(v);
        std::optional<SimplicialComplex> e;
        if (certify_candidate(k, opt, target_dim, min_degree, w, e))
            res.records.push_back(make_record(links, std::move(*e), w));
        if (rest.empty()) break;  // single subset {first}
    }
    return res;
}

// ---- dimension-2 path: induced cycles of length >= 4 ----

/// Depth-first growth of induced paths r, v1, ..., vk with r the smallest
/// vertex. Interior vertices ban their whole neighborhoods (chords), the
/// root's neighborhood is allowed only as the closing vertex, and cycles are
/// emitted once (closing vertex must exceed v1, killing the mirror image).
struct CycleSearch {
    const SimplicialComplex& k;
    const HomologyOptions& opt;
    const std::vector<SimplicialComplex>& links;
    const Graph& g;
    long long quota;
    WorkResult res;
    std::vector<VertexId> path;

    CycleSearch(const SimplicialComplex& k_, const HomologyOptions& opt_,
                const std::vector<SimplicialComplex>& links_, long long quota_)
        : k(k_), opt(opt_), links(links_), g(k_.one_skeleton()),
          quota(quota_) {}

    bool budget_spent() {
        if (res.examined == quota) {
            res.truncated = true;
            return true;
        }
        ++res.examined;
        return false;
    }

    void root(VertexId r) {
        path.assign(1, r);
        Face low = Face::full(r + 1);  // r and everything below
        Face on_path;
        on_path.insert(r);
        g.neighbors(r).for_each([&](VertexId v1) {
            if (v1 > r && !res.truncated)
                grow(r, v1, on_path.with(v1), low, Face{});
        });
    }

    /// path ends at `cur`; `banned` = neighborhoods of interior vertices
    /// v1..v_{k-1} (chord exclusion).
    void grow(VertexId r, VertexId cur, Face on_path, const Face& low,
              const Face& banned) {
        if (budget_spent()) return;
        path.push_back(cur);
        const Face& ncur = g.neighbors(cur);
        const Face& nr = g.neighbors(r);
        Face usable = ncur.minus(banned).minus(on_path).minus(low);

        // close: w adjacent to both cur and r, cycle length >= 4,
        // direction-canonical (second vertex < closing vertex)
        if (path.size() >= 3) {
            Face closers = usable.intersect(nr);
            closers.for_each([&](VertexId w) {
                if (res.truncated || w <= path[1]) return;
                if (budget_spent()) return;
                Face cyc = on_path.with(w);
                std::optional<SimplicialComplex> e;
                if (certify_candidate(k, opt, 1, 2, cyc, e))
                    res.records.push_back(make_record(links, std::move(*e), cyc));
            });
        }

        // extend: w must avoid the root's neighborhood (it would otherwise
        // be a chord in any cycle through it)
        Face extenders = usable.minus(nr);
        Face next_banned = banned.unite(ncur);
        extenders.for_each([&](VertexId w) {
            if (!res.truncated)
                grow(r, w, on_path.with(w), low, next_banned);
        });
        path.pop_back();
    }
};

WorkResult run_cycle_root(const SimplicialComplex& k,
                          const HomologyOptions& opt,
                          const std::vector<SimplicialComplex>& links,
                          VertexId r, long long quota) {
    CycleSearch cs(k, opt, links, quota);
    cs.root(r);
    return std::move(cs.res);
}

}  // namespace

EquatorEnumeration enumerate_equators(const SimplicialComplex& k,
                                      const HomologyOptions& opt,
                                      const EquatorLimits& limits) {
    EquatorEnumeration out;
    const int n = k.n();
    const int target_dim = k.dim() - 1;
    if (k.dim() < 0) return out;
    const int jobs = limits.jobs > 0 ? limits.jobs : default_jobs();

    std::vector<SimplicialComplex> links(n);
    for (VertexId v = 0; v < n; ++v) links[v] = k.link(Face{v});

    // flag input sharpens the pruning: induced subcomplexes of a flag
    // complex are flag, and flag homology m-spheres need 2(m+1) vertices
    // and vertex degree 2m, against m+2 and m+1 in general
    const bool flag = is_flag(k);
    const int min_degree =
        flag ? 2 * target_dim : target_dim + 1;

    std::vector<WorkResult> results;
    if (target_dim == -1) {
        // only the empty set can induce the (-1)-sphere
        WorkResult res;
        res.examined = 1;
        std::optional<SimplicialComplex> e;
        if (certify_candidate(k, opt, -1, 0, Face{}, e))
            res.records.push_back(make_record(links, std::move(*e), Face{}));
        results.push_back(std::move(res));
    } else if (k.dim() == 2 && flag) {
        // flag input: the only 1-sphere-inducing vertex sets are induced
        // graph cycles (length >= 4); per-root budget shares, fixed before
        // any work starts
        std::vector<long long> quota(n, limits.subset_budget / std::max(n, 1));
        for (int r = 0; r < n && r < limits.subset_budget % n; ++r) ++quota[r];
        results = parallel_map<WorkResult>(n, jobs, [&](int r) {
            return run_cycle_root(k, opt, links, r, quota[r]);
        });
    } else {
        // tasks in canonical order (size, then smallest vertex), each with a
        // pre-allocated share of the budget
        std::vector<SubsetTask> tasks;
        long long remaining = limits.subset_budget;
        const int min_size =
            flag ? 2 * (target_dim + 1) : target_dim + 2;
        for (int s = std::max(1, min_size); s <= n - 1; ++s) {
            for (VertexId first = 0; first + s <= n; ++first) {
                SubsetTask t;
                t.size = s;
                t.first = first;
                t.available = binomial_clamped(n - first - 1, s - 1);
                t.quota = std::min(remaining, t.available);
                remaining -= t.quota;
                if (t.quota < t.available) out.truncated = true;
                if (t.quota > 0) tasks.push_back(t);
            }
        }
        results = parallel_map<WorkResult>(
            static_cast<int>(tasks.size()), jobs, [&](int i) {
                return run_subset_task(k, opt, links, target_dim, min_degree,
                                       tasks[i]);
            });
    }

    for (WorkResult& res : results) {
        out.candidates_examined += res.examined;
        out.truncated = out.truncated || res.truncated;
        for (EquatorRecord& r : res.records)
            out.records.push_back(std::move(r));
    }
    std::sort(out.records.begin(), out.records.end(),
              [](const EquatorRecord& a, const EquatorRecord& b) {
                  return a.w < b.w;
              });
    return out;
}

std::optional<std::pair<VertexId, VertexId>> is_suspension(
    const SimplicialComplex& k) {
    const int n = k.n();
    const Graph& g = k.one_skeleton();
    std::vector<SimplicialComplex> links(n);
    for (VertexId v = 0; v < n; ++v) links[v] = k.link(Face{v});
    const Face all = Face::full(n);
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) {
            if (g.has_edge(a, b) || !(links[a] == links[b])) continue;
            if (links[a] == k.induced(all.without(a).without(b)))
                return std::make_pair(a, b);
        }
    return std::nullopt;
}

std::optional<VertexId> classify_vertex_link(const SimplicialComplex& k,
                                             const SimplicialComplex& e) {
    for (VertexId v = 0; v < k.n(); ++v)
        if (k.link(Face{v}) == e) return v;
    return std::nullopt;
}

BallDecomposition ball_decomposition(const SimplicialComplex& k,
                                     const Face& w) {
    if (!k.is_pure())
        throw std::invalid_argument("decomposition requires a pure complex");
    const auto& facets = k.facets();
    const int m = static_cast<int>(facets.size());
    const int fsize = facets.empty() ? 0 : facets[0].size();

    // flood facet-adjacency, refusing to cross ridges lying inside w
    std::vector<int> comp(m, -1);
    int ncomp = 0;
    for (int s = 0; s < m; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < m; ++j) {
                if (comp[j] >= 0) continue;
                Face shared = facets[i].intersect(facets[j]);
                if (shared.size() != fsize - 1 || shared.subset_of(w)) continue;
                comp[j] = ncomp;
                stack.push_back(j);
            }
        }
        ++ncomp;
    }
    if (ncomp != 2)
        throw std::runtime_error(
            "cut produced " + std::to_string(ncomp) +
            " side(s); the given set is not a separating equator");

    std::vector<Face> side1, side2;
    for (int i = 0; i < m; ++i)
        (comp[i] == 0 ? side1 : side2).push_back(facets[i]);

    BallDecomposition bd;
    bd.b1 = SimplicialComplex::raw(k.n(), std::move(side1));
    bd.b2 = SimplicialComplex::raw(k.n(), std::move(side2));
    bd.e = k.induced(w);
    bd.interior1 = bd.b1.support().minus(w).size();
    bd.interior2 = bd.b2.support().minus(w).size();
    return bd;
}

GammaDecompositionCheck gamma_decomposition_check(const SimplicialComplex& k,
                                                  const Face& w,
                                                  const HomologyOptions& opt) {
    BallDecomposition bd = ball_decomposition(k, w);
    const int n = k.n();

    auto cap = [&](const SimplicialComplex& side, VertexId apex, int ambient) {
        std::vector<Face> fs = side.facets();
        for (const Face& f : bd.e.facets()) fs.push_back(f.with(apex));
        return SimplicialComplex::raw(ambient, std::move(fs));
    };
    SimplicialComplex d1 = cap(bd.b1, n, n + 1);
    SimplicialComplex d2 = cap(bd.b2, n + 1, n + 2);

    GammaDecompositionCheck r;
    r.delta1_sphere = is_homology_sphere(d1, opt).verdict == SphereVerdict::sphere;
    r.delta2_sphere = is_homology_sphere(d2, opt).verdict == SphereVerdict::sphere;
    r.gamma_k = gamma_polynomial(k);
    r.gamma_d1 = gamma_polynomial(d1);
    r.gamma_d2 = gamma_polynomial(d2);
    r.gamma_e = gamma_polynomial(bd.e);
    r.gamma_identity = (r.gamma_k == r.gamma_d1 + r.gamma_d2 - r.gamma_e);

    IntPolynomial f_sides = f_polynomial(d1) + f_polynomial(d2);
    r.f_identity = (f_polynomial(k) == f_sides - f_polynomial(suspension(bd.e)));

    r.pass = r.delta1_sphere && r.delta2_sphere && r.gamma_identity &&
             r.f_identity;
    return r;
}

LinkConjectureCheck link_conjecture_check(const SimplicialComplex& k) {
    LinkConjectureCheck r;
    r.gamma_k = gamma_polynomial(k);
    for (VertexId v = 0; v < k.n(); ++v)
        if (!poly_leq(gamma_polynomial(k.link(Face{v})), r.gamma_k))
            r.violations.push_back(v);
    r.pass = r.violations.empty();
    return r;
}

EquatorConjectureCheck equator_conjecture_check(const SimplicialComplex& k,
                                                const HomologyOptions& opt,
                                                const EquatorLimits& limits) {
    EquatorConjectureCheck r;
    r.gamma_k = gamma_polynomial(k);
    EquatorEnumeration en = enumerate_equators(k, opt, limits);
    r.truncated = en.truncated;
    r.equators_checked = static_cast<long long>(en.records.size());
    for (const EquatorRecord& rec : en.records)
        if (!poly_leq(rec.gamma_e, r.gamma_k)) r.violations.push_back(rec.w);
    r.pass = r.violations.empty();
    return r;
}

StructureVerdict structure_check(const SimplicialComplex& k,
                                 const HomologyOptions& opt,
                                 const EquatorLimits& limits) {
    StructureVerdict sv;
    sv.alt0 = is_suspension(k);
    sv.alt1 = c4_free_edges(k);

    const int n = k.n();
    const Graph& g = k.one_skeleton();
    for (VertexId v = 0; v < n; ++v)
        if (n - 1 - g.degree(v) <= 2) {
            sv.few_nonneighbors_vertex = v;
            break;
        }
    if (sv.few_nonneighbors_vertex) {
        sv.fired_clause = sv.alt0 ? 0 : (!sv.alt1.empty() ? 1 : -1);
        sv.fast_path_consistent = (sv.fired_clause != -1);
    }
    if (sv.alt0 || !sv.alt1.empty()) {
        sv.satisfied = true;
        return sv;
    }

    EquatorEnumeration en = enumerate_equators(k, opt, limits);
    sv.truncated = en.truncated;
    sv.alt2_evaluated = true;
    sv.alt2.assign(n, std::nullopt);
    sv.alt2_holds = true;
    for (VertexId v = 0; v < n; ++v) {
        for (const EquatorRecord& rec : en.records)
            if (!rec.is_vertex_link && !rec.w.contains(v)) {
                sv.alt2[v] = rec.w;
                break;
            }
        if (!sv.alt2[v]) sv.alt2_holds = false;
    }
    sv.satisfied = sv.alt2_holds;
    return sv;
}

Dim2Check dim2_theorem_check(const SimplicialComplex& k,
                             const HomologyOptions& opt,
                             const EquatorLimits& limits) {
    if (k.dim() != 2)
        throw std::invalid_argument(
            "dimension-2 structure check requires a 2-dimensional complex");
    Dim2Check r;
    const int n = k.n();
    const Graph& g = k.one_skeleton();
    for (VertexId v = 0; v < n; ++v)
        if (n - 1 - g.degree(v) <= 2) {
            r.clause_i = true;
            r.clause_i_vertex = v;
            break;
        }
    if (r.clause_i) {
        r.pass = true;
        return r;
    }
    EquatorEnumeration en = enumerate_equators(k, opt, limits);
    r.truncated = en.truncated;
    r.per_vertex_witness.assign(n, std::nullopt);
    r.pass = true;
    for (VertexId v = 0; v < n; ++v) {
        for (const EquatorRecord& rec : en.records)
            if (!rec.is_vertex_link && !rec.w.contains(v)) {
                r.per_vertex_witness[v] = rec.w;
                break;
            }
        if (!r.per_vertex_witness[v]) r.pass = false;
    }
    return r;
}

}  // namespace flagsphere
