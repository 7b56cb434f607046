// End-to-end acceptance suite. Each criterion prints one [PASS]/[FAIL]
// line; the exit code is the number of failed criteria. Unlike the unit
// tests this file exercises whole pipelines on full catalogs and seeded
// batches, with wall-clock budgets where the behavior is meant to be cheap.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "flagsphere/canonical.hpp"
#include "flagsphere/catalog.hpp"
#include "flagsphere/checks.hpp"
#include "flagsphere/complex.hpp"
#include "flagsphere/equators.hpp"
#include "flagsphere/graph.hpp"
#include "flagsphere/homology.hpp"
#include "flagsphere/inequalities.hpp"
#include "flagsphere/io.hpp"
#include "flagsphere/matching.hpp"
#include "flagsphere/moves.hpp"
#include "flagsphere/parallel.hpp"
#include "flagsphere/vectors.hpp"

using namespace flagsphere;

namespace {

Integer binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Ground truth for equator enumeration: try every vertex subset and
// certify the induced subcomplex directly.
std::set<Face> equators_by_subsets(const SimplicialComplex& k) {
    std::set<Face> out;
    const int target = k.dim() - 1;
    const std::vector<VertexId> vs = k.support().vertices();
    const int n = static_cast<int>(vs.size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Face w;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) w.insert(vs[static_cast<size_t>(i)]);
        SimplicialComplex e = k.induced(w);
        if (e.dim() != target) continue;
        if (is_homology_sphere(e).verdict == SphereVerdict::sphere)
            out.insert(w);
    }
    return out;
}

std::string first_error(const std::vector<std::string>& errs) {
    for (const auto& e : errs)
        if (!e.empty()) return e;
    return "";
}

// ---------------------------------------------------------------------------
// 1. The vector pipeline reproduces frozen values on the reference complexes.

std::string vectors_on_references() {
    for (int d = 1; d <= 5; ++d) {
        VectorReport r = vector_report(SimplicialComplex::octahedral_sphere(d));
        if (r.d != d) return "octahedral d mismatch";
        IntPolynomial h;
        for (int i = 0; i <= d; ++i) h.set_coeff(i, binom(d, i));
        if (r.h != h)
            return "octahedral_sphere(" + std::to_string(d) +
                   "): h = " + r.h.to_string() + ", want " + h.to_string();
        if (!r.dehn_sommerville || !r.gamma || *r.gamma != IntPolynomial{1})
            return "octahedral_sphere(" + std::to_string(d) +
                   "): gamma is not (1)";
    }
    VectorReport ico = vector_report(icosahedron());
    if (ico.f != IntPolynomial{1, 12, 30, 20})
        return "icosahedron: f = " + ico.f.to_string();
    if (ico.h != IntPolynomial{1, 9, 9, 1})
        return "icosahedron: h = " + ico.h.to_string();
    if (!ico.gamma || *ico.gamma != IntPolynomial{1, 6})
        return "icosahedron: gamma is not (1, 6)";
    IntPolynomial pent = gamma_polynomial(SimplicialComplex::cycle(5));
    if (pent != IntPolynomial{1, 1})
        return "pentagon: gamma = " + pent.to_string();
    return "";
}

// ---------------------------------------------------------------------------
// 2. Suspension and contraction gamma identities across the seeded family.

std::string gamma_identities_on_family() {
    struct Instance {
        int d, steps;
        uint64_t seed;
    };
    std::vector<Instance> instances;
    for (int d = 2; d <= 4; ++d)
        for (int steps = 1; steps <= 8; ++steps)
            for (int r = 0; r < 9; ++r)
                instances.push_back(
                    {d, steps, static_cast<uint64_t>(1000 * d + 100 * steps + r)});
    if (instances.size() < 200) return "fewer than 200 instances generated";
    auto errs = parallel_map<std::string>(
        static_cast<int>(instances.size()), default_jobs(),
        [&](int i) -> std::string {
            const Instance& in = instances[static_cast<size_t>(i)];
            auto [k, script] = generate_family_s(in.d, in.steps, in.seed);
            std::string tag = "d=" + std::to_string(in.d) +
                              " steps=" + std::to_string(in.steps) +
                              " seed=" + std::to_string(in.seed);
            GammaIdentityCheck s = suspension_gamma_check(k);
            if (!s.pass) return tag + ": suspension identity failed";
            for (Edge e : c4_free_edges(k)) {
                GammaIdentityCheck c = contraction_gamma_check(k, e);
                if (!c.pass)
                    return tag + ": contraction identity failed at {" +
                           std::to_string(e.u) + ", " + std::to_string(e.v) +
                           "}";
            }
            return "";
        });
    return first_error(errs);
}

// ---------------------------------------------------------------------------
// 3. Equator enumeration matches the all-subsets ground truth, and the
//    gamma/f decomposition identities hold exactly, on every flag 2-sphere
//    with at most 12 vertices.

std::string equators_on_small_flag_spheres() {
    std::vector<SimplicialComplex> all = enumerate_flag_2spheres(12);
    if (all.size() != 130)
        return "expected 130 flag 2-spheres on <= 12 vertices, got " +
               std::to_string(all.size());
    auto errs = parallel_map<std::string>(
        static_cast<int>(all.size()), default_jobs(),
        [&](int i) -> std::string {
            const SimplicialComplex& k = all[static_cast<size_t>(i)];
            std::string tag = "member " + std::to_string(i) + " (n=" +
                              std::to_string(k.n()) + ")";
            EquatorEnumeration e = enumerate_equators(k);
            if (e.truncated) return tag + ": enumeration truncated";
            std::set<Face> found;
            for (const auto& rec : e.records) found.insert(rec.w);
            if (found != equators_by_subsets(k))
                return tag + ": enumeration disagrees with subset scan";
            for (const auto& rec : e.records) {
                GammaDecompositionCheck g = gamma_decomposition_check(k, rec.w);
                if (!g.pass || !g.gamma_identity || !g.f_identity)
                    return tag + ": decomposition identity failed at " +
                           rec.w.to_string();
            }
            return "";
        });
    return first_error(errs);
}

// ---------------------------------------------------------------------------
// 4. Complement graphs of catalog members carry verified half-integral
//    perfect matchings, and the matching solver agrees with the exhaustive
//    obstruction scan on every graph small enough to scan.

std::string matchings_and_brute_agreement() {
    Catalog cat = builtin_catalog();
    for (const CatalogMember& m : cat.members()) {
        Graph g = complement_graph(m.complex);
        std::optional<HalfIntegralMatching> pm = half_integral_pm(g);
        if (!pm) return m.name + ": no half-integral matching found";
        if (!verify_half_integral(g, *pm))
            return m.name + ": matching failed verification";
        size_t covered = 2 * pm->matching_edges.size();
        for (const auto& c : pm->odd_cycles) covered += c.size();
        if (covered != static_cast<size_t>(g.n()))
            return m.name + ": decomposition is not a vertex partition";
        if (g.n() <= 20 && !half_tutte_brute(g))
            return m.name + ": exhaustive scan disagrees (claims no matching)";
    }
    std::mt19937_64 gen(20250815);
    int solvable = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(gen() % 16);
        Graph g(n);
        int fifths = 1 + trial % 4;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                if (static_cast<int>(gen() % 5) < fifths) g.add_edge(u, v);
        bool brute = half_tutte_brute(g);
        std::optional<HalfIntegralMatching> pm = half_integral_pm(g);
        if (pm.has_value() != brute)
            return "random graph trial " + std::to_string(trial) +
                   " (n=" + std::to_string(n) + "): solver says " +
                   (pm ? "yes" : "no") + ", exhaustive scan says " +
                   (brute ? "yes" : "no");
        if (pm && !verify_half_integral(g, *pm))
            return "random graph trial " + std::to_string(trial) +
                   ": matching failed verification";
        solvable += pm.has_value() ? 1 : 0;
    }
    if (solvable == 0 || solvable == 200)
        return "degenerate random sample (solvable = " +
               std::to_string(solvable) + "/200)";
    return "";
}

// ---------------------------------------------------------------------------
// 5. The vertex-sum h-inequality holds coefficientwise on every member,
//    with equality exactly on octahedral spheres, and arc summation
//    reproduces the aggregate as an exact integer identity.

std::string vertex_sum_inequality_and_arcs() {
    bool saw_equality = false, saw_strict = false;
    Catalog cat = builtin_catalog();
    for (const CatalogMember& m : cat.members()) {
        VertexSumInequalityCheck r = h_ineq_check(m.complex);
        if (!r.pass || !r.holds) return m.name + ": inequality does not hold";
        if (r.equality != is_octahedral(m.complex))
            return m.name + ": tightness does not match octahedrality";
        (r.equality ? saw_equality : saw_strict) = true;
        std::optional<HalfIntegralMatching> pm =
            half_integral_pm(complement_graph(m.complex));
        if (!pm) return m.name + ": complement has no matching";
        ArcSummationCheck a = arc_summation_check(m.complex, *pm);
        if (!a.pass || !a.arcs_equal_f0 || !a.per_arc_all_hold ||
            !a.sum_matches || !a.sum_bounded)
            return m.name + ": arc summation failed (arcs=" +
                   std::to_string(a.arcs) + ")";
    }
    if (!saw_equality || !saw_strict)
        return "catalog lacks a tight or a strict instance";
    return "";
}

// ---------------------------------------------------------------------------
// 6. The h1-scaled h-vector bounds hold in rows 1..d on every member (row 0
//    is an equality by construction), with the frozen octahedral equality
//    9 = 9 at d = 3, i = 1, and the exact gap bridge identity everywhere.

std::string h1_scaled_bounds() {
    Catalog cat = builtin_catalog();
    for (const CatalogMember& m : cat.members()) {
        H1HiCheck hc = h1hi_ineq_check(m.complex);
        if (!hc.pass) {
            std::string rows;
            for (int i : hc.failing_indices) rows += " " + std::to_string(i);
            return m.name + ": rows" + rows + " fail";
        }
        if (hc.rows.empty() || hc.rows[0].lhs != hc.rows[0].rhs)
            return m.name + ": row 0 is not an equality";
        GapIdentityCheck gp = gap_identity_check(m.complex);
        if (!gp.pass || gp.gap != gp.combo)
            return m.name + ": gap bridge identity failed";
    }
    H1HiCheck octa = h1hi_ineq_check(SimplicialComplex::octahedral_sphere(3));
    if (octa.rows.size() < 2 || octa.rows[1].lhs != 9 || octa.rows[1].rhs != 9)
        return "octahedral d=3 row 1 is not the equality 9 = 9";
    return "";
}

// ---------------------------------------------------------------------------
// 7. The vertex-link h-sum identity is exact in every index on every member.

std::string link_h_sum_identity() {
    Catalog cat = builtin_catalog();
    for (const CatalogMember& m : cat.members()) {
        McMullenCheck c = mcmullen_identity_check(m.complex);
        if (!c.pass) return m.name + ": identity check failed";
        if (c.rows.size() != static_cast<size_t>(c.d))
            return m.name + ": expected " + std::to_string(c.d) + " rows";
        for (const McMullenRow& row : c.rows)
            if (row.lhs != row.rhs)
                return m.name + ": row i=" + std::to_string(row.i) +
                       " is not exact";
    }
    return "";
}

// ---------------------------------------------------------------------------
// 8. Every facet of every catalog member has a disjoint facet, and the
//    result is genuinely a facet disjoint from the input.

std::string disjoint_facets_everywhere() {
    Catalog cat = builtin_catalog();
    for (const CatalogMember& m : cat.members()) {
        const std::vector<Face>& facets = m.complex.facets();
        for (const Face& sigma : facets) {
            DisjointFacetResult r = disjoint_facet(m.complex, sigma);
            if (!r.found)
                return m.name + ": no disjoint facet for " + sigma.to_string();
            if (!std::binary_search(facets.begin(), facets.end(), r.facet))
                return m.name + ": result is not a facet";
            for (VertexId v : r.facet.vertices())
                if (sigma.contains(v))
                    return m.name + ": facets intersect at vertex " +
                           std::to_string(v);
        }
    }
    return "";
}

// ---------------------------------------------------------------------------
// 9. Every flag 2-sphere with at most 11 vertices satisfies one of the
//    structural alternatives, and every non-octahedral one has an edge on
//    no induced 4-cycle.

std::string structure_on_small_flag_spheres() {
    std::vector<SimplicialComplex> all = enumerate_flag_2spheres(11);
    if (all.size() != 43)
        return "expected 43 flag 2-spheres on <= 11 vertices, got " +
               std::to_string(all.size());
    auto errs = parallel_map<std::string>(
        static_cast<int>(all.size()), default_jobs(),
        [&](int i) -> std::string {
            const SimplicialComplex& k = all[static_cast<size_t>(i)];
            std::string tag = "member " + std::to_string(i) + " (n=" +
                              std::to_string(k.n()) + ")";
            StructureVerdict s = structure_check(k);
            if (s.truncated) return tag + ": structure check truncated";
            if (!s.satisfied) return tag + ": no alternative holds";
            if (!s.fast_path_consistent)
                return tag + ": fast-path promise violated";
            if (!is_octahedral(k) && c4_free_edges(k).empty())
                return tag + ": non-octahedral but every edge is on an "
                             "induced 4-cycle";
            return "";
        });
    return first_error(errs);
}

// ---------------------------------------------------------------------------
// 10. Batch scans of the three conjecture checks are clean on the builtin
//     catalog: every certification and every check passes.

std::string conjecture_scans_clean() {
    Catalog cat = builtin_catalog();
    CheckParams prm;
    prm.jobs = default_jobs();
    std::vector<Report> reports =
        scan_catalog(cat, {"gal", "link", "equator"}, prm);
    if (reports.size() != 4 * cat.size())
        return "expected " + std::to_string(4 * cat.size()) + " reports, got " +
               std::to_string(reports.size());
    for (const Report& r : reports)
        if (r.verdict != Verdict::kPass)
            return r.input + "/" + r.check + ": " + to_string(r.verdict) +
                   (r.note.empty() ? "" : " (" + r.note + ")");
    return "";
}

// ---------------------------------------------------------------------------
// 11. Subdividing an edge and contracting the fresh edge returns the
//     original complex on 100 seeded cases, and both file formats
//     round-trip byte-for-byte on every catalog member.

std::string round_trips() {
    std::mt19937_64 gen(9001);
    for (int trial = 0; trial < 100; ++trial) {
        int d = 2 + trial % 3;
        int steps = trial % 6;
        auto [base, script] =
            generate_family_s(d, steps, static_cast<uint64_t>(12000 + trial));
        const std::vector<Face>& edges = base.faces_by_card()[2];
        Face ef = edges[static_cast<size_t>(gen() % edges.size())];
        std::vector<VertexId> vs = ef.vertices();
        SimplicialComplex sub =
            stellar_subdivide_edge(base, make_edge(vs[0], vs[1]));
        VertexId fresh = base.n();
        SimplicialComplex back = contract_edge(sub, make_edge(vs[0], fresh));
        if (!is_isomorphic(back, base))
            return "trial " + std::to_string(trial) +
                   ": contraction did not undo the subdivision";
    }
    Catalog cat = builtin_catalog();
    for (const CatalogMember& m : cat.members()) {
        std::ostringstream t1;
        write_complex_text(t1, m.complex);
        std::istringstream tin(t1.str());
        ComplexDocument tdoc = read_complex_text(tin);
        std::ostringstream t2;
        write_complex_text(t2, tdoc.complex);
        if (tdoc.complex != m.complex || t1.str() != t2.str())
            return m.name + ": text round trip is not byte-stable";
        std::ostringstream s1;
        write_complex_structured(s1, m.complex, m.name);
        std::istringstream sin(s1.str());
        ComplexDocument sdoc = read_complex_structured(sin);
        std::ostringstream s2;
        write_complex_structured(s2, sdoc.complex, sdoc.name);
        if (sdoc.complex != m.complex || sdoc.name != m.name ||
            s1.str() != s2.str())
            return m.name + ": structured round trip is not byte-stable";
    }
    return "";
}

struct Criterion {
    const char* name;
    long long budget_ms;  // 0 = no wall-clock requirement
    std::string (*run)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"frozen f/h/gamma vectors on the reference complexes", 1000,
         vectors_on_references},
        {"suspension and contraction gamma identities on 216 seeded family "
         "members",
         60'000, gamma_identities_on_family},
        {"equator enumeration vs subset scan + exact decomposition "
         "(flag 2-spheres, n <= 12)",
         0, equators_on_small_flag_spheres},
        {"half-integral matchings in complements, solver vs exhaustive scan",
         0, matchings_and_brute_agreement},
        {"vertex-sum h-inequality, octahedral tightness, arc summation", 0,
         vertex_sum_inequality_and_arcs},
        {"h1-scaled h-vector bounds, rows 1..d, and the gap bridge identity",
         0, h1_scaled_bounds},
        {"vertex-link h-sum identity exact in every index", 0,
         link_h_sum_identity},
        {"disjoint facet found for every facet of every member", 0,
         disjoint_facets_everywhere},
        {"structure alternatives on all flag 2-spheres with n <= 11", 600'000,
         structure_on_small_flag_spheres},
        {"gal/link/equator scans clean on the builtin catalog", 0,
         conjecture_scans_clean},
        {"subdivide-contract round trip and byte-stable file round trips", 0,
         round_trips},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string err;
        try {
            err = c.run();
        } catch (const std::exception& e) {
            err = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        if (err.empty() && c.budget_ms > 0 && ms > c.budget_ms)
            err = "exceeded wall-clock budget of " +
                  std::to_string(c.budget_ms) + " ms";
        std::printf("[%s] %s (%lld ms)\n", err.empty() ? "PASS" : "FAIL",
                    c.name, static_cast<long long>(ms));
        if (!err.empty()) {
            std::printf("       %s\n", err.c_str());
            ++failures;
        }
    }
    std::printf("%d of %d criteria passed\n",
                static_cast<int>(std::size(criteria)) - failures,
                static_cast<int>(std::size(criteria)));
    return failures;
}
