#include "flagsphere/inequalities.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

#include "flagsphere/vectors.hpp"

namespace flagsphere {

namespace {

/// Walk down vertex links removing sigma's smallest vertex each time; at the
/// bottom any facet works, and on the way back up each level swaps its
/// removed vertex across the ridge found below. On a flag homology sphere
/// every ridge lies in exactly two facets and flagness keeps the swapped
/// vertex out of sigma, so the walk ends at a facet disjoint from sigma.
/// Bails out (nullopt) the moment any structural assumption fails.
std::optional<Face> recipe(const SimplicialComplex& k, const Face& sigma) {
    if (sigma.empty()) {
        if (k.facets().empty()) return std::nullopt;
        return k.facets().front();
    }
    const VertexId v = sigma.min_vertex();
    std::optional<Face> ridge = recipe(k.link(Face{v}), sigma.without(v));
    if (!ridge) return std::nullopt;

    const Face ours = ridge->with(v);
    std::optional<Face> other;
    for (const Face& f : k.facets()) {
        if (f.size() != ours.size() || !ridge->subset_of(f)) continue;
        if (f == ours) continue;
        if (other) return std::nullopt;  // ridge in three facets
        other = f;
    }
    if (!other || other->intersects(sigma)) return std::nullopt;
    return other;
}

}  // namespace

DisjointFacetResult disjoint_facet(const SimplicialComplex& k,
                                   const Face& sigma) {
    if (!k.is_face(sigma))
        throw std::invalid_argument("not a face: " + sigma.to_string());
    DisjointFacetResult out;
    if (std::optional<Face> f = recipe(k, sigma)) {
        if (!f->intersects(sigma) &&
            std::binary_search(k.facets().begin(), k.facets().end(), *f)) {
            out.found = true;
            out.via_recipe = true;
            out.facet = *f;
            return out;
        }
    }
    for (const Face& f : k.facets()) {
        if (!f.intersects(sigma)) {
            out.found = true;
            out.facet = f;
            return out;
        }
    }
    return out;
}

ShellingInequalityResult shelling_inequality_check(const SimplicialComplex& k,
                                                   VertexId u, VertexId v) {
    if (u < 0 || v < 0 || u >= k.n() || v >= k.n() || u == v)
        throw std::invalid_argument("need two distinct vertices");
    if (k.one_skeleton().has_edge(u, v))
        throw std::invalid_argument("vertices are adjacent: {" +
                                    std::to_string(u) + "," +
                                    std::to_string(v) + "}");
    ShellingInequalityResult r;
    r.u = u;
    r.v = v;
    const int d = k.dim() + 1;
    IntPolynomial hv = h_from_f(f_polynomial(k.link(Face{v})), d - 1);
    IntPolynomial hu = h_from_f(f_polynomial(k.link(Face{u})), d - 1);
    r.lhs = hv + hu.shifted(1);
    r.rhs = h_from_f(f_polynomial(k), d);
    r.holds = poly_leq(r.lhs, r.rhs);
    r.equality = (r.lhs == r.rhs);
    r.facets_covered = true;
    for (const Face& f : k.facets())
        if (!f.contains(u) && !f.contains(v)) {
            r.facets_covered = false;
            break;
        }
    r.tightness_consistent = (r.equality == r.facets_covered);
    r.pass = r.holds && r.tightness_consistent;
    return r;
}

VertexSumInequalityCheck h_ineq_check(const SimplicialComplex& k) {
    VertexSumInequalityCheck r;
    const int d = k.dim() + 1;
    const Integer f0 = k.f_vector().size() > 1 ? Integer(k.f_vector()[1]) : 0;
    r.lhs = IntPolynomial{1, 1} * vertex_link_h_sum(k);
    r.rhs = h_from_f(f_polynomial(k), d) * f0;
    r.holds = poly_leq(r.lhs, r.rhs);
    r.equality = (r.lhs == r.rhs);
    r.octahedral = is_octahedral(k);
    r.tightness_consistent = (r.equality == r.octahedral);
    r.pass = r.holds && r.tightness_consistent;
    return r;
}

ArcSummationCheck arc_summation_check(const SimplicialComplex& k,
                                      const HalfIntegralMatching& m) {
    ArcSummationCheck r;
    // arcs (a -> b): every matching edge both ways, every odd cycle around
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (auto [a, b] : m.matching_edges) {
        arcs.emplace_back(a, b);
        arcs.emplace_back(b, a);
    }
    for (const auto& cyc : m.odd_cycles)
        for (size_t i = 0; i < cyc.size(); ++i)
            arcs.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);

    r.arcs = static_cast<long long>(arcs.size());
    const long long f0 = k.n();
    r.arcs_equal_f0 = (r.arcs == f0);

    const Graph& g = k.one_skeleton();
    r.per_arc_all_hold = true;
    IntPolynomial total;
    for (auto [a, b] : arcs) {
        if (g.has_edge(a, b))
            throw std::invalid_argument(
                "matching arc joins adjacent vertices; expected a matching "
                "on the complement graph");
        // the instance h(lk_b) + t·h(lk_a) <= h for the non-edge ab
        ShellingInequalityResult s = shelling_inequality_check(k, a, b);
        if (!s.holds) r.per_arc_all_hold = false;
        total = total + s.lhs;
    }
    r.total = total;
    r.expected = IntPolynomial{1, 1} * vertex_link_h_sum(k);
    r.bound = h_from_f(f_polynomial(k), k.dim() + 1) * Integer(f0);
    r.sum_matches = (r.total == r.expected);
    r.sum_bounded = poly_leq(r.total, r.bound);
    r.pass = r.arcs_equal_f0 && r.per_arc_all_hold && r.sum_matches &&
             r.sum_bounded;
    return r;
}

H1HiCheck h1hi_ineq_check(const SimplicialComplex& k) {
    H1HiCheck r;
    r.d = k.dim() + 1;
    IntPolynomial h = h_from_f(f_polynomial(k), r.d);
    const Integer& h1 = h.coeff(1);
    r.pass = true;
    for (int i = 0; i <= r.d; ++i) {
        H1HiRow row;
        row.i = i;
        row.lhs = h1 * h.coeff(i);
        row.rhs = Integer(r.d - i + 1) * h.coeff(i - 1) +
                  Integer(i + 1) * h.coeff(i + 1);
        row.holds = (row.lhs >= row.rhs);
        if (!row.holds) {
            r.pass = false;
            r.failing_indices.push_back(i);
        }
        r.rows.push_back(std::move(row));
    }
    return r;
}

GapIdentityCheck gap_identity_check(const SimplicialComplex& k) {
    GapIdentityCheck r;
    const int d = k.dim() + 1;
    IntPolynomial h = h_from_f(f_polynomial(k), d);
    const Integer f0 = k.f_vector().size() > 1 ? Integer(k.f_vector()[1]) : 0;
    r.gap = h * f0 - IntPolynomial{1, 1} * vertex_link_h_sum(k);

    const Integer& h1 = h.coeff(1);
    std::vector<Integer> combo(d + 3);
    for (int i = 0; i <= d + 2; ++i)
        combo[i] = h1 * h.coeff(i) - Integer(d - i + 1) * h.coeff(i - 1) -
                   Integer(i + 1) * h.coeff(i + 1);
    r.combo = IntPolynomial(std::move(combo));
    r.pass = (r.gap == r.combo);
    return r;
}

ColoringResult balanced_coloring(const SimplicialComplex& k,
                                 long long node_cap) {
    ColoringResult r;
    const int n = k.n();
    const int num_colors = k.dim() + 1;
    if (n == 0) {
        r.outcome = ColoringOutcome::kColorable;
        return r;
    }
    if (num_colors <= 0) {
        // vertices exist but no colors allowed
        r.outcome = ColoringOutcome::kNotColorable;
        return r;
    }
    const Graph& g = k.one_skeleton();

    // static order: highest degree first (fail fast)
    std::vector<VertexId> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });

    std::vector<int> color(n, -1);
    long long nodes = 0;
    bool capped = false;

    // colors are introduced in canonical order (vertex may use at most
    // one color beyond the maximum used so far) — prunes color symmetry
    std::function<bool(int, int)> go = [&](int idx, int used) {
        if (idx == n) return true;
        if (++nodes > node_cap) {
            capped = true;
            return false;
        }
        VertexId v = order[idx];
        int limit = std::min(num_colors - 1, used);
        for (int c = 0; c <= limit; ++c) {
            bool ok = true;
            g.neighbors(v).for_each([&](VertexId w) {
                if (ok && color[w] == c) ok = false;
            });
            if (!ok) continue;
            color[v] = c;
            if (go(idx + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
            if (capped) return false;
        }
        return false;
    };

    bool found = go(0, 0);
    r.nodes_visited = nodes;
    if (found) {
        r.outcome = ColoringOutcome::kColorable;
        r.colors = std::move(color);
    } else {
        r.outcome = capped ? ColoringOutcome::kInconclusive
                           : ColoringOutcome::kNotColorable;
    }
    return r;
}

BalancedCheck balanced_nonedge_check(const SimplicialComplex& k,
                                     const std::vector<int>& colors) {
    const int n = k.n();
    const int num_colors = k.dim() + 1;
    if (static_cast<int>(colors.size()) != n)
        throw std::invalid_argument("coloring size mismatch");
    for (int c : colors)
        if (c < 0 || c >= num_colors)
            throw std::invalid_argument("color out of range");
    const Graph& g = k.one_skeleton();
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v])
            throw std::invalid_argument("coloring is not proper");

    BalancedCheck r;
    std::vector<int> class_size(num_colors, 0);
    for (int c : colors) ++class_size[c];
    for (VertexId v = 0; v < n; ++v)
        if (class_size[colors[v]] < 2) r.lonely_vertices.push_back(v);

    r.complement_pm_exists = half_integral_pm(g.complement()).has_value();
    r.vertex_sum_holds = h_ineq_check(k).holds;
    r.pass = r.lonely_vertices.empty() && r.complement_pm_exists &&
             r.vertex_sum_holds;
    return r;
}

}  // namespace flagsphere
