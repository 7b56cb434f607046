#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagsphere/complex.hpp"

namespace flagsphere {

/// Reduced Betti numbers over GF(p) for dimensions -1..top_dim. The empty
/// complex {∅} has b_{-1} = 1; every nonempty complex has b_{-1} = 0.
struct BettiVector {
    int top_dim = -1;
    std::vector<long long> b;  // b[k+1] = reduced Betti number in dim k

    long long reduced(int k) const {
        int idx = k + 1;
        if (idx < 0 || idx >= static_cast<int>(b.size())) return 0;
        return b[idx];
    }

    /// All zero except a single 1 in dimension `sphere_dim` (which may be -1,
    /// the pattern of the empty complex).
    bool is_sphere_pattern(int sphere_dim) const {
        for (int k = -1; k <= top_dim; ++k)
            if (reduced(k) != (k == sphere_dim ? 1 : 0)) return false;
        return sphere_dim <= top_dim;
    }

    bool is_acyclic() const {
        for (long long x : b)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const BettiVector&) const = default;
    std::string to_string() const;
};

struct HomologyOptions {
    int p = 2;                    // field characteristic (prime)
    long long face_cap = 200000;  // refuse larger complexes
    bool memoize_links = true;    // dedupe isomorphic links during certification
};

bool is_prime(int p);

/// Reduced Betti numbers from boundary-matrix ranks over GF(p) (dense
/// elimination; bit-packed rows for p = 2). Errors on non-prime p and when
/// the face count exceeds the cap.
BettiVector betti_mod_p(const SimplicialComplex& k, int p,
                        long long face_cap = 200000);

enum class SphereVerdict { sphere, ball, neither };
std::string to_string(SphereVerdict v);

struct LinkFailure {
    Face face;
    BettiVector betti;
};

/// Certificate that every face (including the empty one) has a link with
/// sphere homology in the complementary dimension — or a list of offenders.
struct SphereCertificate {
    SphereVerdict verdict = SphereVerdict::neither;
    int p = 2;
    int dim = -1;
    std::vector<LinkFailure> failures;
    std::optional<SimplicialComplex> boundary;  // filled by the ball check
};

SphereCertificate is_homology_sphere(const SimplicialComplex& k,
                                     const HomologyOptions& opt = {});

/// Ball certificate: every link is either a sphere of complementary
/// dimension or acyclic, and the acyclic-link faces assemble into a
/// (d-2)-dimensional homology sphere (the boundary). Requires a pure input.
SphereCertificate is_homology_ball(const SimplicialComplex& k,
                                   const HomologyOptions& opt = {});

/// Boundary of a certified homology ball; errors when k is not one.
SimplicialComplex boundary_complex(const SimplicialComplex& k,
                                   const HomologyOptions& opt = {});

}  // namespace flagsphere
