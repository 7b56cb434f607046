#include "flagsphere/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "flagsphere/canonical.hpp"

namespace flagsphere {

std::string BettiVector::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < b.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(b[i]);
    }
    return s + ")";
}

std::string to_string(SphereVerdict v) {
    switch (v) {
        case SphereVerdict::sphere: return "sphere";
        case SphereVerdict::ball: return "ball";
        default: return "neither";
    }
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

namespace {

// rank of a GF(2) matrix given as bit-packed rows
int rank_gf2(std::vector<std::vector<uint64_t>> rows) {
    std::vector<std::pair<int, int>> pivots;  // (bit column, row index)
    int rank = 0;
    for (size_t r = 0; r < rows.size(); ++r) {
        auto& row = rows[r];
        for (auto [col, pr] : pivots)
            if ((row[col >> 6] >> (col & 63)) & 1u) {
                const auto& prow = rows[pr];
                for (size_t w = 0; w < row.size(); ++w) row[w] ^= prow[w];
            }
        int lead = -1;
        for (size_t w = 0; w < row.size() && lead < 0; ++w)
            if (row[w]) lead = static_cast<int>(w) * 64 + __builtin_ctzll(row[w]);
        if (lead >= 0) {
            pivots.emplace_back(lead, static_cast<int>(r));
            ++rank;
        }
    }
    return rank;
}

int64_t inverse_mod(int64_t a, int64_t p) {
    // extended Euclid; p prime, a != 0 mod p
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return t < 0 ? t + p : t;
}

int rank_gfp(std::vector<std::vector<int32_t>> rows, int p) {
    std::vector<std::pair<int, int>> pivots;  // (column, row index)
    int rank = 0;
    for (size_t r = 0; r < rows.size(); ++r) {
        auto& row = rows[r];
        for (auto [col, pr] : pivots) {
            int64_t c = row[col] % p;
            if (!c) continue;
            const auto& prow = rows[pr];  // normalized: prow[col] == 1
            for (size_t j = 0; j < row.size(); ++j) {
                row[j] = static_cast<int32_t>(
                    ((row[j] - c * prow[j]) % p + p) % p);
            }
        }
        int lead = -1;
        for (size_t j = 0; j < row.size(); ++j)
            if (row[j] % p) {
                lead = static_cast<int>(j);
                break;
            }
        if (lead >= 0) {
            int64_t inv = inverse_mod(((row[lead] % p) + p) % p, p);
            for (auto& x : row)
                x = static_cast<int32_t>((((x % p) * inv) % p + p) % p);
            pivots.emplace_back(lead, static_cast<int>(r));
            ++rank;
        }
    }
    return rank;
}

int face_index(const std::vector<Face>& sorted_bucket, const Face& f) {
    auto it = std::lower_bound(sorted_bucket.begin(), sorted_bucket.end(), f);
    return static_cast<int>(it - sorted_bucket.begin());
}

// rank of the boundary map from cardinality-c faces to cardinality-(c-1)
// faces
int boundary_rank(const std::vector<std::vector<Face>>& buckets, int c, int p) {
    const auto& high = buckets[c];
    const auto& low = buckets[c - 1];
    if (high.empty() || low.empty()) return 0;
    int cols = static_cast<int>(low.size());
    if (p == 2) {
        int words = (cols + 63) / 64;
        std::vector<std::vector<uint64_t>> rows(
            high.size(), std::vector<uint64_t>(words, 0));
        for (size_t r = 0; r < high.size(); ++r) {
            high[r].for_each([&](VertexId v) {
                int col = face_index(low, high[r].without(v));
                rows[r][col >> 6] ^= uint64_t{1} << (col & 63);
            });
        }
        return rank_gf2(std::move(rows));
    }
    std::vector<std::vector<int32_t>> rows(high.size(),
                                           std::vector<int32_t>(cols, 0));
    for (size_t r = 0; r < high.size(); ++r) {
        int pos = 0;
        high[r].for_each([&](VertexId v) {
            int col = face_index(low, high[r].without(v));
            rows[r][col] = (pos % 2) ? p - 1 : 1;
            ++pos;
        });
    }
    return rank_gfp(std::move(rows), p);
}

BettiVector betti_from_buckets(const std::vector<std::vector<Face>>& buckets,
                               int p) {
    int top_card = static_cast<int>(buckets.size()) - 1;  // = dim + 1
    std::vector<int> rank(top_card + 2, 0);
    for (int c = 1; c <= top_card; ++c) rank[c] = boundary_rank(buckets, c, p);
    BettiVector out;
    out.top_dim = top_card - 1;
    out.b.resize(top_card + 1);
    for (int c = 0; c <= top_card; ++c)
        out.b[c] = static_cast<long long>(buckets[c].size()) - rank[c] -
                   rank[c + 1];
    return out;
}

void check_options(const SimplicialComplex& k, const HomologyOptions& opt) {
    if (!is_prime(opt.p))
        throw std::invalid_argument("characteristic must be prime, got " +
                                    std::to_string(opt.p));
    long long count = k.face_count();
    if (count > opt.face_cap)
        throw std::runtime_error("face count " + std::to_string(count) +
                                 " exceeds cap " +
                                 std::to_string(opt.face_cap));
}

/// Betti numbers of every face link, deduplicating isomorphic links.
class LinkAnalyzer {
public:
    LinkAnalyzer(const SimplicialComplex& k, const HomologyOptions& opt)
        : k_(k), opt_(opt) {}

    BettiVector betti_of_link(const Face& f) {
        SimplicialComplex lk = k_.link(f);
        if (!opt_.memoize_links) return betti_from_buckets(lk.faces_by_card(), opt_.p);
        std::string key = canonical_key(lk);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        BettiVector bv = betti_from_buckets(lk.faces_by_card(), opt_.p);
        memo_.emplace(std::move(key), bv);
        return bv;
    }

private:
    const SimplicialComplex& k_;
    const HomologyOptions& opt_;
    std::unordered_map<std::string, BettiVector> memo_;
};

}  // namespace

BettiVector betti_mod_p(const SimplicialComplex& k, int p, long long face_cap) {
    HomologyOptions opt;
    opt.p = p;
    opt.face_cap = face_cap;
    check_options(k, opt);
    return betti_from_buckets(k.faces_by_card(), p);
}

SphereCertificate is_homology_sphere(const SimplicialComplex& k,
                                     const HomologyOptions& opt) {
    check_options(k, opt);
    SphereCertificate cert;
    cert.p = opt.p;
    cert.dim = k.dim();
    LinkAnalyzer analyzer(k, opt);
    for (const auto& bucket : k.faces_by_card()) {
        for (const Face& f : bucket) {
            BettiVector bv = analyzer.betti_of_link(f);
            if (!bv.is_sphere_pattern(cert.dim - f.size()))
                cert.failures.push_back({f, std::move(bv)});
        }
    }
    cert.verdict = cert.failures.empty() ? SphereVerdict::sphere
                                         : SphereVerdict::neither;
    return cert;
}

SphereCertificate is_homology_ball(const SimplicialComplex& k,
                                   const HomologyOptions& opt) {
    if (!k.is_pure())
        throw std::invalid_argument("homology-ball check requires a pure complex");
    check_options(k, opt);
    SphereCertificate cert;
    cert.p = opt.p;
    cert.dim = k.dim();
    LinkAnalyzer analyzer(k, opt);

    std::vector<Face> boundary_faces;
    bool empty_face_on_boundary = false;
    for (const auto& bucket : k.faces_by_card()) {
        for (const Face& f : bucket) {
            BettiVector bv = analyzer.betti_of_link(f);
            if (bv.is_sphere_pattern(cert.dim - f.size())) continue;
            if (bv.is_acyclic()) {
                boundary_faces.push_back(f);
                if (f.empty()) empty_face_on_boundary = true;
            } else {
                cert.failures.push_back({f, std::move(bv)});
            }
        }
    }
    if (!cert.failures.empty() || boundary_faces.empty() ||
        !empty_face_on_boundary) {
        cert.verdict = SphereVerdict::neither;
        return cert;
    }

    // the boundary faces must form a complex ...
    std::vector<Face> sorted(boundary_faces);
    std::sort(sorted.begin(), sorted.end());
    for (const Face& f : boundary_faces) {
        bool closed = true;
        f.for_each([&](VertexId v) {
            if (!std::binary_search(sorted.begin(), sorted.end(), f.without(v)))
                closed = false;
        });
        if (!closed) {
            cert.verdict = SphereVerdict::neither;
            return cert;
        }
    }

    // ... and that complex must be a homology sphere one dimension down
    SimplicialComplex boundary = SimplicialComplex::raw(k.n(), sorted);
    if (boundary.dim() != cert.dim - 1) {
        cert.verdict = SphereVerdict::neither;
        return cert;
    }
    SphereCertificate bcert = is_homology_sphere(boundary, opt);
    if (bcert.verdict != SphereVerdict::sphere) {
        cert.verdict = SphereVerdict::neither;
        cert.failures = std::move(bcert.failures);
        return cert;
    }
    cert.verdict = SphereVerdict::ball;
    cert.boundary = std::move(boundary);
    return cert;
}

SimplicialComplex boundary_complex(const SimplicialComplex& k,
                                   const HomologyOptions& opt) {
    SphereCertificate cert = is_homology_ball(k, opt);
    if (cert.verdict != SphereVerdict::ball)
        throw std::invalid_argument("input is not a homology ball");
    return *cert.boundary;
}

}  // namespace flagsphere
