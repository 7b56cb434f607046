#include "flagsphere/checks.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "flagsphere/canonical.hpp"
#include "flagsphere/equators.hpp"
#include "flagsphere/inequalities.hpp"
#include "flagsphere/matching.hpp"
#include "flagsphere/moves.hpp"
#include "flagsphere/parallel.hpp"
#include "flagsphere/vectors.hpp"

namespace flagsphere {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json poly_json(const IntPolynomial& p) {
    auto arr = ordered_json::array();
    for (const Integer& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

ordered_json face_json(const SimplicialComplex& k, const Face& f) {
    auto arr = ordered_json::array();
    f.for_each([&](VertexId v) { arr.push_back(k.label(v)); });
    return arr;
}

HomologyOptions homology_options(const CheckParams& prm) {
    HomologyOptions opt;
    opt.p = prm.p;
    return opt;
}

EquatorLimits equator_limits(const CheckParams& prm) {
    EquatorLimits lim;
    lim.subset_budget = prm.subset_budget;
    lim.jobs = prm.jobs;
    return lim;
}

// ---- the individual checks; each fills verdict/note/witnesses ----

void check_certify(const CatalogMember& m, const CheckParams& prm, Report& r) {
    const MemberCertificate cert = certify_member(m, prm);
    r.witnesses["flag"] = cert.flag;
    r.witnesses["certificate"] = to_string(cert.verdict);
    r.witnesses["n"] = m.complex.n();
    r.witnesses["dim"] = m.complex.dim();
    r.witnesses["provenance"] = m.provenance;
    r.verdict = cert.certified() ? Verdict::kPass : Verdict::kFail;
    r.note = std::string(cert.flag ? "flag" : "not flag") + ", " +
             to_string(cert.verdict);
}

void check_gal(const CatalogMember& m, const CheckParams&, Report& r) {
    const VectorReport vr = vector_report(m.complex);
    r.witnesses["f"] = poly_json(vr.f);
    r.witnesses["h"] = poly_json(vr.h);
    r.witnesses["dehn_sommerville"] = vr.dehn_sommerville;
    if (!vr.gamma) {
        r.verdict = Verdict::kError;
        r.note = "Dehn-Sommerville fails; gamma undefined";
        return;
    }
    r.witnesses["gamma"] = poly_json(*vr.gamma);
    bool nonneg = true;
    for (const Integer& c : vr.gamma->coeffs())
        if (c < 0) nonneg = false;
    r.verdict = nonneg ? Verdict::kPass : Verdict::kFail;
    r.note = "gamma = " + vr.gamma->to_string();
}

void check_link(const CatalogMember& m, const CheckParams&, Report& r) {
    const LinkConjectureCheck c = link_conjecture_check(m.complex);
    r.witnesses["gamma"] = poly_json(c.gamma_k);
    auto viol = ordered_json::array();
    for (VertexId v : c.violations) viol.push_back(m.complex.label(v));
    r.witnesses["violations"] = viol;
    r.verdict = c.pass ? Verdict::kPass : Verdict::kFail;
    r.note = c.pass ? "every vertex link bounded"
                    : std::to_string(c.violations.size()) +
                          " vertex link(s) exceed gamma(K)";
}

void check_equator(const CatalogMember& m, const CheckParams& prm, Report& r) {
    const EquatorConjectureCheck c =
        equator_conjecture_check(m.complex, homology_options(prm),
                                 equator_limits(prm));
    r.parameters["subset_budget"] = prm.subset_budget;
    r.witnesses["equators_checked"] = c.equators_checked;
    r.witnesses["gamma"] = poly_json(c.gamma_k);
    auto viol = ordered_json::array();
    for (const Face& w : c.violations) viol.push_back(face_json(m.complex, w));
    r.witnesses["violations"] = viol;
    if (!c.pass) {
        r.verdict = Verdict::kFail;
        r.note = std::to_string(c.violations.size()) +
                 " equator(s) exceed gamma(K)";
    } else if (c.truncated) {
        r.verdict = Verdict::kTruncated;
        r.note = "no violation found before the subset budget ran out";
    } else {
        r.verdict = Verdict::kPass;
        r.note = "no violation in " + std::to_string(c.equators_checked) +
                 " equator(s)";
    }
}

void check_structure(const CatalogMember& m, const CheckParams& prm,
                     Report& r) {
    const StructureVerdict sv =
        structure_check(m.complex, homology_options(prm), equator_limits(prm));
    r.parameters["subset_budget"] = prm.subset_budget;
    if (sv.alt0) {
        auto pair = ordered_json::array();
        pair.push_back(m.complex.label(sv.alt0->first));
        pair.push_back(m.complex.label(sv.alt0->second));
        r.witnesses["suspension_apexes"] = pair;
    }
    r.witnesses["c4_free_edges"] = static_cast<long long>(sv.alt1.size());
    r.witnesses["alt2_evaluated"] = sv.alt2_evaluated;
    r.witnesses["fast_path_consistent"] = sv.fast_path_consistent;
    if (!sv.fast_path_consistent) {
        r.verdict = Verdict::kFail;
        r.note = "vertex with <= 2 non-neighbors but neither a suspension "
                 "nor a contractible edge";
        return;
    }
    if (sv.satisfied) {
        r.verdict = Verdict::kPass;
        r.note = sv.alt0 ? "suspension"
                         : (!sv.alt1.empty()
                                ? std::to_string(sv.alt1.size()) +
                                      " contractible edge(s)"
                                : "every vertex avoids a non-link equator");
    } else if (sv.truncated) {
        r.verdict = Verdict::kTruncated;
        r.note = "no alternative confirmed before the subset budget ran out";
    } else {
        r.verdict = Verdict::kFail;
        r.note = "no structural alternative holds";
        auto missing = ordered_json::array();
        for (VertexId v = 0; v < m.complex.n(); ++v)
            if (sv.alt2_evaluated && !sv.alt2[static_cast<size_t>(v)])
                missing.push_back(m.complex.label(v));
        r.witnesses["vertices_without_witness"] = missing;
    }
}

void check_dim2(const CatalogMember& m, const CheckParams& prm, Report& r) {
    if (m.complex.dim() != 2) {
        r.verdict = Verdict::kPass;
        r.note = "not applicable (dim != 2)";
        r.witnesses["applicable"] = false;
        return;
    }
    const Dim2Check c =
        dim2_theorem_check(m.complex, homology_options(prm),
                           equator_limits(prm));
    r.witnesses["applicable"] = true;
    r.witnesses["few_nonneighbors"] = c.clause_i;
    if (c.clause_i_vertex)
        r.witnesses["vertex"] = m.complex.label(*c.clause_i_vertex);
    if (c.pass) {
        r.verdict = Verdict::kPass;
        r.note = c.clause_i ? "a vertex has at most two non-neighbors"
                            : "every vertex avoids a non-link equator";
    } else if (c.truncated) {
        r.verdict = Verdict::kTruncated;
        r.note = "witness search hit the subset budget";
    } else {
        r.verdict = Verdict::kFail;
        r.note = "dichotomy fails";
        auto missing = ordered_json::array();
        for (size_t v = 0; v < c.per_vertex_witness.size(); ++v)
            if (!c.per_vertex_witness[v])
                missing.push_back(m.complex.label(static_cast<VertexId>(v)));
        r.witnesses["vertices_without_witness"] = missing;
    }
}

void check_h_ineq(const CatalogMember& m, const CheckParams&, Report& r) {
    const VertexSumInequalityCheck c = h_ineq_check(m.complex);
    r.witnesses["lhs"] = poly_json(c.lhs);
    r.witnesses["rhs"] = poly_json(c.rhs);
    r.witnesses["equality"] = c.equality;
    r.witnesses["octahedral"] = c.octahedral;
    bool pass = c.pass;
    std::string detail = c.holds ? (c.equality ? "tight" : "strict") : "FAILS";

    // the same inequality, re-derived one arc at a time over the complement
    // matching decomposition — included whenever the matching exists
    if (auto pm = half_integral_pm(complement_graph(m.complex))) {
        const ArcSummationCheck arcs = arc_summation_check(m.complex, *pm);
        r.witnesses["arc_sum"] = {{"arcs", arcs.arcs},
                                  {"arcs_equal_f0", arcs.arcs_equal_f0},
                                  {"per_arc_all_hold", arcs.per_arc_all_hold},
                                  {"sum_matches", arcs.sum_matches},
                                  {"sum_bounded", arcs.sum_bounded}};
        pass = pass && arcs.pass;
        if (!arcs.pass) detail += "; arc summation check fails";
    }
    r.verdict = pass ? Verdict::kPass : Verdict::kFail;
    r.note = detail + (c.tightness_consistent
                           ? ""
                           : "; tightness does not match octahedrality");
}

void check_h1hi(const CatalogMember& m, const CheckParams&, Report& r) {
    const H1HiCheck c = h1hi_ineq_check(m.complex);
    auto rows = ordered_json::array();
    int holds_from = -1, holds_to = -2;
    for (const H1HiRow& row : c.rows) {
        rows.push_back({{"i", row.i},
                        {"lhs", row.lhs.str()},
                        {"rhs", row.rhs.str()},
                        {"holds", row.holds}});
        if (row.holds) {
            if (holds_from < 0) holds_from = row.i;
            holds_to = row.i;
        }
    }
    r.witnesses["rows"] = rows;
    r.witnesses["holds_for"] = "i = " + std::to_string(holds_from) + ".." +
                               std::to_string(holds_to);
    const GapIdentityCheck gap = gap_identity_check(m.complex);
    r.witnesses["gap_identity"] = gap.pass;
    r.verdict = (c.pass && gap.pass) ? Verdict::kPass : Verdict::kFail;
    r.note = c.pass ? ("holds for all 0 <= i <= " + std::to_string(c.d))
                    : (std::to_string(c.failing_indices.size()) +
                       " index(es) fail");
    if (!gap.pass) r.note += "; gap identity fails";
}

void check_matching(const CatalogMember& m, const CheckParams&, Report& r) {
    const Graph comp = complement_graph(m.complex);
    const auto pm = half_integral_pm(comp);
    if (!pm) {
        r.verdict = Verdict::kFail;
        r.note = "complement graph has no half-integral perfect matching";
        if (comp.n() <= 20)
            if (auto x = half_tutte_violator(comp))
                r.witnesses["obstruction"] = face_json(m.complex, *x);
        return;
    }
    if (!verify_half_integral(comp, *pm)) {
        r.verdict = Verdict::kFail;
        r.note = "extracted matching fails verification";
        return;
    }
    auto weights = ordered_json::array();
    for (auto [u, v, h] : pm->weighted_edges())
        weights.push_back({m.complex.label(u), m.complex.label(v),
                           h == 2 ? "1" : "1/2"});
    auto edges = ordered_json::array();
    for (auto [u, v] : pm->matching_edges)
        edges.push_back({m.complex.label(u), m.complex.label(v)});
    auto cycles = ordered_json::array();
    for (const auto& cyc : pm->odd_cycles) {
        auto one = ordered_json::array();
        for (VertexId v : cyc) one.push_back(m.complex.label(v));
        cycles.push_back(std::move(one));
    }
    r.witnesses["weights"] = std::move(weights);
    r.witnesses["matching_edges"] = std::move(edges);
    r.witnesses["odd_cycles"] = std::move(cycles);
    r.verdict = Verdict::kPass;
    r.note = std::to_string(pm->matching_edges.size()) + " edge(s), " +
             std::to_string(pm->odd_cycles.size()) + " odd cycle(s)";
}

void check_mcmullen(const CatalogMember& m, const CheckParams&, Report& r) {
    const McMullenCheck c = mcmullen_identity_check(m.complex);
    auto rows = ordered_json::array();
    for (const McMullenRow& row : c.rows)
        rows.push_back({{"i", row.i},
                        {"lhs", row.lhs.str()},
                        {"rhs", row.rhs.str()}});
    r.witnesses["rows"] = rows;
    r.verdict = c.pass ? Verdict::kPass : Verdict::kFail;
    r.note = c.pass ? ("identity exact for i = 1.." + std::to_string(c.d))
                    : "identity fails";
}

void check_contraction_id(const CatalogMember& m, const CheckParams&,
                          Report& r) {
    const std::vector<Edge> edges = c4_free_edges(m.complex);
    auto failures = ordered_json::array();
    for (const Edge& e : edges) {
        const GammaIdentityCheck c = contraction_gamma_check(m.complex, e);
        if (!c.pass) {
            failures.push_back({{"edge",
                                 ordered_json::array(
                                     {m.complex.label(e.u),
                                      m.complex.label(e.v)})},
                                {"lhs", poly_json(c.lhs)},
                                {"rhs", poly_json(c.rhs)}});
        }
    }
    r.witnesses["edges_tested"] = static_cast<long long>(edges.size());
    r.witnesses["failures"] = failures;
    r.verdict = failures.empty() ? Verdict::kPass : Verdict::kFail;
    r.note = edges.empty()
                 ? "no contractible edges"
                 : ("identity exact on " + std::to_string(edges.size()) +
                    " contractible edge(s)");
    if (!failures.empty())
        r.note = std::to_string(failures.size()) + " edge(s) break the identity";
}

void check_suspension_id(const CatalogMember& m, const CheckParams&,
                         Report& r) {
    const GammaIdentityCheck c = suspension_gamma_check(m.complex);
    r.witnesses["gamma"] = poly_json(c.lhs);
    r.witnesses["gamma_suspension"] = poly_json(c.gamma_transformed);
    r.verdict = c.pass ? Verdict::kPass : Verdict::kFail;
    r.note = c.pass ? "gamma(susp K) = gamma(K)" : "identity fails";
}

void check_balanced(const CatalogMember& m, const CheckParams& prm,
                    Report& r) {
    const ColoringResult col = balanced_coloring(m.complex, prm.coloring_cap);
    r.parameters["coloring_cap"] = prm.coloring_cap;
    if (col.outcome == ColoringOutcome::kInconclusive) {
        r.verdict = Verdict::kTruncated;
        r.note = "coloring search hit the node cap";
        return;
    }
    if (col.outcome == ColoringOutcome::kNotColorable) {
        r.verdict = Verdict::kPass;
        r.note = "not balanced (no proper coloring with dim+1 colors)";
        r.witnesses["balanced"] = false;
        return;
    }
    r.witnesses["balanced"] = true;
    auto colors = ordered_json::array();
    for (int c : col.colors) colors.push_back(c);
    r.witnesses["coloring"] = colors;
    const BalancedCheck c = balanced_nonedge_check(m.complex, col.colors);
    r.witnesses["complement_pm_exists"] = c.complement_pm_exists;
    r.witnesses["vertex_sum_holds"] = c.vertex_sum_holds;
    auto lonely = ordered_json::array();
    for (VertexId v : c.lonely_vertices) lonely.push_back(m.complex.label(v));
    r.witnesses["lonely_vertices"] = lonely;
    r.verdict = c.pass ? Verdict::kPass : Verdict::kFail;
    r.note = c.pass ? "balanced; partner/matching/inequality all hold"
                    : "balanced but a consequence fails";
}

}  // namespace

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names = {
        "gal",      "link",   "equator",  "structure",
        "dim2",     "h-ineq", "h1hi",     "matching",
        "mcmullen", "contraction-id",     "suspension-id",
        "balanced"};
    return names;
}

bool is_check_name(const std::string& name) {
    const auto& names = all_check_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

MemberCertificate certify_member(const CatalogMember& m,
                                 const CheckParams& prm) {
    MemberCertificate cert;
    cert.flag = is_flag(m.complex);
    cert.verdict = is_homology_sphere(m.complex, homology_options(prm)).verdict;
    return cert;
}

Report run_check(const std::string& check, const CatalogMember& m,
                 const CheckParams& prm) {
    Report r;
    r.check = check;
    r.input = m.name;
    r.parameters["p"] = prm.p;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (check == "certify")
            check_certify(m, prm, r);
        else if (check == "gal")
            check_gal(m, prm, r);
        else if (check == "link")
            check_link(m, prm, r);
        else if (check == "equator")
            check_equator(m, prm, r);
        else if (check == "structure")
            check_structure(m, prm, r);
        else if (check == "dim2")
            check_dim2(m, prm, r);
        else if (check == "h-ineq")
            check_h_ineq(m, prm, r);
        else if (check == "h1hi")
            check_h1hi(m, prm, r);
        else if (check == "matching")
            check_matching(m, prm, r);
        else if (check == "mcmullen")
            check_mcmullen(m, prm, r);
        else if (check == "contraction-id")
            check_contraction_id(m, prm, r);
        else if (check == "suspension-id")
            check_suspension_id(m, prm, r);
        else if (check == "balanced")
            check_balanced(m, prm, r);
        else
            throw std::invalid_argument("unknown check: " + check);
    } catch (const std::exception& e) {
        r.verdict = Verdict::kError;
        r.note = e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    r.millis =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

std::vector<Report> scan_catalog(const Catalog& c,
                                 const std::vector<std::string>& checks,
                                 const CheckParams& prm) {
    // members in parallel; inside one member the checks run serially and
    // with inner parallelism off, so thread count stays at prm.jobs
    CheckParams inner = prm;
    inner.jobs = 1;
    const auto per_member = parallel_map<std::vector<Report>>(
        static_cast<int>(c.size()), prm.jobs, [&](int i) {
            const CatalogMember& m = c.members()[static_cast<size_t>(i)];
            std::vector<Report> rs;
            rs.push_back(run_check("certify", m, inner));
            const bool certified = rs.front().verdict == Verdict::kPass;
            for (const std::string& name : checks) {
                if (name == "certify") continue;
                if (certified) {
                    rs.push_back(run_check(name, m, inner));
                } else {
                    Report skip;
                    skip.check = name;
                    skip.input = m.name;
                    skip.verdict = Verdict::kError;
                    skip.note =
                        "skipped: member is not a certified flag homology "
                        "sphere";
                    rs.push_back(std::move(skip));
                }
            }
            return rs;
        });
    std::vector<Report> out;
    for (const auto& rs : per_member)
        for (const Report& r : rs) out.push_back(r);
    return out;
}

}  // namespace flagsphere
