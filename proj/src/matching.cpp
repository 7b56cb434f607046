#include "flagsphere/matching.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace flagsphere {

Graph complement_graph(const SimplicialComplex& k) {
    return k.one_skeleton().complement();
}

int HalfIntegralMatching::halves(VertexId u, VertexId v) const {
    for (auto [a, b] : matching_edges)
        if ((a == u && b == v) || (a == v && b == u)) return 2;
    for (const auto& cyc : odd_cycles) {
        const size_t m = cyc.size();
        for (size_t i = 0; i < m; ++i) {
            VertexId a = cyc[i], b = cyc[(i + 1) % m];
            if ((a == u && b == v) || (a == v && b == u)) return 1;
        }
    }
    return 0;
}

std::vector<std::tuple<VertexId, VertexId, int>>
HalfIntegralMatching::weighted_edges() const {
    std::vector<std::tuple<VertexId, VertexId, int>> out;
    for (auto [a, b] : matching_edges)
        out.emplace_back(std::min(a, b), std::max(a, b), 2);
    for (const auto& cyc : odd_cycles) {
        const size_t m = cyc.size();
        for (size_t i = 0; i < m; ++i) {
            VertexId a = cyc[i], b = cyc[(i + 1) % m];
            out.emplace_back(std::min(a, b), std::max(a, b), 1);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

/// Hopcroft–Karp on the bipartite double cover of g: left copy u0 of every
/// vertex, right copy v1, and u0-v1 connected iff uv is an edge of g.
/// Returns match_l (left vertex -> right partner), or an empty vector when
/// the cover has no perfect matching.
std::vector<int> double_cover_matching(const Graph& g) {
    const int n = g.n();
    constexpr int kInf = 1 << 30;
    std::vector<int> match_l(n, -1), match_r(n, -1), dist(n);

    auto bfs = [&] {
        std::queue<int> q;
        for (int u = 0; u < n; ++u) {
            if (match_l[u] < 0) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = kInf;
            }
        }
        bool found = false;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            g.neighbors(u).for_each([&](VertexId v) {
                int w = match_r[v];
                if (w < 0) {
                    found = true;
                } else if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            });
        }
        return found;
    };

    std::function<bool(int)> dfs = [&](int u) {
        bool ok = false;
        g.neighbors(u).for_each([&](VertexId v) {
            if (ok) return;
            int w = match_r[v];
            if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
                match_l[u] = v;
                match_r[v] = u;
                ok = true;
            }
        });
        if (!ok) dist[u] = kInf;
        return ok;
    };

    int matched = 0;
    while (bfs())
        for (int u = 0; u < n; ++u)
            if (match_l[u] < 0 && dfs(u)) ++matched;
    return matched == n ? match_l : std::vector<int>{};
}

/// Chains weight-1/2 edges (adjacency lists; every touched vertex must have
/// exactly two of them) into cycles with a deterministic orientation, and
/// re-rounds even cycles to alternating full edges.
void chain_half_cycles(const std::vector<std::vector<VertexId>>& half_adj,
                       HalfIntegralMatching& out) {
    const int n = static_cast<int>(half_adj.size());
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s] || half_adj[s].empty()) continue;
        if (half_adj[s].size() != 2)
            throw std::invalid_argument("half-weight degree is not 0 or 2");
        std::vector<VertexId> cyc;
        // deterministic orientation: start at the smallest vertex, step
        // toward its smaller neighbor
        int prev = -1, cur = s;
        VertexId first_step = std::min(half_adj[s][0], half_adj[s][1]);
        while (!seen[cur]) {
            if (half_adj[cur].size() != 2)
                throw std::invalid_argument("half-weight degree is not 0 or 2");
            seen[cur] = 1;
            cyc.push_back(cur);
            int next = (prev < 0) ? first_step
                                  : (half_adj[cur][0] == prev ? half_adj[cur][1]
                                                              : half_adj[cur][0]);
            prev = cur;
            cur = next;
        }
        if (cur != s || cyc.size() < 3)
            throw std::invalid_argument("malformed half-weight cycle");
        if (cyc.size() % 2 == 0) {
            // an even cycle re-rounds to a plain alternating matching
            for (size_t i = 0; i < cyc.size(); i += 2)
                out.matching_edges.emplace_back(std::min(cyc[i], cyc[i + 1]),
                                                std::max(cyc[i], cyc[i + 1]));
        } else {
            out.odd_cycles.push_back(std::move(cyc));
        }
    }
}

}  // namespace

std::optional<HalfIntegralMatching> half_integral_pm(const Graph& g) {
    const int n = g.n();
    HalfIntegralMatching out;
    if (n == 0) return out;

    std::vector<int> match_l = double_cover_matching(g);
    if (match_l.empty()) return std::nullopt;

    // halves(uv) = [u0-v1 matched] + [v0-u1 matched]; at every vertex the
    // halves sum to 2, so weight-1 edges pair up and weight-1/2 edges chain
    // into disjoint cycles.
    std::vector<std::vector<VertexId>> half_adj(n);
    for (int u = 0; u < n; ++u) {
        int v = match_l[u];
        if (match_l[v] == u) {
            if (u < v) out.matching_edges.emplace_back(u, v);
        } else {
            half_adj[u].push_back(v);
            half_adj[v].push_back(u);
        }
    }

    chain_half_cycles(half_adj, out);
    std::sort(out.matching_edges.begin(), out.matching_edges.end());
    return out;
}

HalfIntegralMatching decompose_half_weights(
    const Graph& g,
    const std::vector<std::tuple<VertexId, VertexId, int>>& weights) {
    const int n = g.n();
    HalfIntegralMatching out;
    std::vector<int> sum(n, 0);
    std::vector<std::vector<VertexId>> half_adj(n);
    std::set<std::pair<VertexId, VertexId>> listed;
    for (auto [a, b, h] : weights) {
        if (a < 0 || a >= n || b < 0 || b >= n || a == b)
            throw std::invalid_argument("weight on an invalid vertex pair");
        if (!g.has_edge(a, b))
            throw std::invalid_argument(
                "weight on a non-edge: {" + std::to_string(a) + ", " +
                std::to_string(b) + "}");
        std::pair<VertexId, VertexId> key{std::min(a, b), std::max(a, b)};
        if (!listed.insert(key).second)
            throw std::invalid_argument("edge weighted twice");
        if (h == 0) continue;
        if (h != 1 && h != 2)
            throw std::invalid_argument("edge weight must be 0, 1, or 2 halves");
        sum[a] += h;
        sum[b] += h;
        if (h == 2) {
            out.matching_edges.push_back(key);
        } else {
            half_adj[a].push_back(b);
            half_adj[b].push_back(a);
        }
    }
    for (int v = 0; v < n; ++v)
        if (sum[v] != 2)
            throw std::invalid_argument("weights at vertex " +
                                        std::to_string(v) +
                                        " do not sum to 1");
    for (auto& adj : half_adj) std::sort(adj.begin(), adj.end());
    chain_half_cycles(half_adj, out);
    std::sort(out.matching_edges.begin(), out.matching_edges.end());
    return out;
}

bool verify_half_integral(const Graph& g, const HalfIntegralMatching& m) {
    std::vector<int> cover(g.n(), 0);
    auto touch = [&](VertexId v) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex range");
        ++cover[v];
    };
    for (auto [u, v] : m.matching_edges) {
        if (!g.has_edge(u, v)) return false;
        touch(u);
        touch(v);
    }
    for (const auto& cyc : m.odd_cycles) {
        if (cyc.size() < 3 || cyc.size() % 2 == 0) return false;
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
            touch(cyc[i]);
        }
    }
    for (int c : cover)
        if (c != 1) return false;
    return true;
}

std::optional<Face> half_tutte_violator(const Graph& g) {
    const int n = g.n();
    if (n > 20)
        throw std::invalid_argument(
            "exhaustive obstruction scan limited to 20 vertices");
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        Face x;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) x.insert(v);
        int isolated = 0;
        for (int v = 0; v < n; ++v)
            if (!x.contains(v) && g.neighbors(v).subset_of(x)) ++isolated;
        if (isolated > x.size()) return x;
    }
    return std::nullopt;
}

}  // namespace flagsphere
