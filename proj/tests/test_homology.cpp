#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "flagsphere/catalog.hpp"
#include "flagsphere/homology.hpp"

using namespace flagsphere;

namespace {

// minimal 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7
SimplicialComplex torus7() {
    std::vector<Face> fs;
    for (int i = 0; i < 7; ++i) {
        fs.push_back(Face::from_vertices({i, (i + 1) % 7, (i + 3) % 7}));
        fs.push_back(Face::from_vertices({i, (i + 2) % 7, (i + 3) % 7}));
    }
    return SimplicialComplex::from_facets(fs);
}

// minimal 6-vertex real projective plane (icosahedron antipodal quotient)
SimplicialComplex rp2() {
    return SimplicialComplex::from_facets(
        {Face{0, 1, 2}, Face{0, 1, 3}, Face{0, 2, 4}, Face{0, 3, 5},
         Face{0, 4, 5}, Face{1, 2, 5}, Face{1, 3, 4}, Face{1, 4, 5},
         Face{2, 3, 4}, Face{2, 3, 5}});
}

SimplicialComplex tetra_boundary() {
    std::vector<Face> fs;
    for (int a = 0; a < 4; ++a) {
        Face f = Face::full(4);
        f.erase(a);
        fs.push_back(f);
    }
    return SimplicialComplex::from_facets(fs);
}

}  // namespace

TEST_CASE("primality filter") {
    for (int p : {2, 3, 5, 7, 13, 101}) CHECK(is_prime(p));
    for (int p : {-3, 0, 1, 4, 6, 9, 100}) CHECK_FALSE(is_prime(p));
    CHECK_THROWS_AS(betti_mod_p(SimplicialComplex::cycle(4), 4),
                    std::exception);
}

TEST_CASE("betti numbers of circles and spheres") {
    BettiVector b = betti_mod_p(SimplicialComplex::cycle(5), 2);
    CHECK(b.top_dim == 1);
    CHECK(b.reduced(-1) == 0);
    CHECK(b.reduced(0) == 0);
    CHECK(b.reduced(1) == 1);
    CHECK(b.is_sphere_pattern(1));

    for (int d = 1; d <= 4; ++d)
        CHECK(betti_mod_p(SimplicialComplex::octahedral_sphere(d), 2)
                  .is_sphere_pattern(d - 1));
    CHECK(betti_mod_p(icosahedron(), 2).is_sphere_pattern(2));
    CHECK(betti_mod_p(tetra_boundary(), 3).is_sphere_pattern(2));
}

TEST_CASE("degenerate complexes") {
    SimplicialComplex empty;
    BettiVector b = betti_mod_p(empty, 2);
    CHECK(b.reduced(-1) == 1);
    CHECK(b.is_sphere_pattern(-1));
    CHECK(is_homology_sphere(empty).verdict == SphereVerdict::sphere);

    SimplicialComplex pt = SimplicialComplex::from_facets({Face{0}});
    CHECK(betti_mod_p(pt, 2).is_acyclic());

    SimplicialComplex three_pts =
        SimplicialComplex::from_facets({Face{0}, Face{1}, Face{2}});
    CHECK(betti_mod_p(three_pts, 2).reduced(0) == 2);
    CHECK(is_homology_sphere(three_pts).verdict == SphereVerdict::neither);
}

TEST_CASE("the torus is not a sphere over any field") {
    SimplicialComplex t = torus7();
    for (int p : {2, 3, 5}) {
        BettiVector b = betti_mod_p(t, p);
        CHECK(b.reduced(0) == 0);
        CHECK(b.reduced(1) == 2);
        CHECK(b.reduced(2) == 1);
    }
    CHECK(is_homology_sphere(t).verdict == SphereVerdict::neither);
}

TEST_CASE("the projective plane separates the characteristics") {
    SimplicialComplex r = rp2();
    BettiVector b2 = betti_mod_p(r, 2);
    CHECK(b2.reduced(1) == 1);
    CHECK(b2.reduced(2) == 1);
    BettiVector b3 = betti_mod_p(r, 3);
    CHECK(b3.is_acyclic());
    // acyclic over GF(3) yet not a ball: its would-be boundary is empty
    CHECK(is_homology_sphere(r, {.p = 3}).verdict == SphereVerdict::neither);
    CHECK(is_homology_ball(r, {.p = 3}).verdict == SphereVerdict::neither);
    CHECK(is_homology_sphere(r, {.p = 2}).verdict == SphereVerdict::neither);
}

TEST_CASE("balls, their boundaries, and non-balls") {
    SimplicialComplex solid =
        SimplicialComplex::from_facets({Face{0, 1, 2}});
    SphereCertificate c = is_homology_ball(solid);
    CHECK(c.verdict == SphereVerdict::ball);
    CHECK(boundary_complex(solid) == SimplicialComplex::cycle(3));

    SimplicialComplex disc = cone(SimplicialComplex::cycle(5));
    CHECK(is_homology_ball(disc).verdict == SphereVerdict::ball);
    CHECK(boundary_complex(disc) == SimplicialComplex::cycle(5));

    CHECK_THROWS_AS(boundary_complex(SimplicialComplex::octahedral_sphere(2)),
                    std::exception);
}

TEST_CASE("sphere certificates carry the offending links") {
    SimplicialComplex three_pts =
        SimplicialComplex::from_facets({Face{0}, Face{1}, Face{2}});
    SphereCertificate c = is_homology_sphere(three_pts);
    CHECK(c.verdict == SphereVerdict::neither);
    REQUIRE_FALSE(c.failures.empty());
    CHECK(c.failures.front().face == Face{});
}

TEST_CASE("face cap stops oversized inputs cleanly") {
    // a 19-simplex has 2^20 faces
    SimplicialComplex big = SimplicialComplex::from_facets({Face::full(20)});
    CHECK_THROWS_AS(betti_mod_p(big, 2, 1000), std::exception);
}

TEST_CASE("link memoization does not change verdicts") {
    SimplicialComplex k = icosahedron();
    HomologyOptions with{.p = 2, .face_cap = 200000, .memoize_links = true};
    HomologyOptions without{.p = 2, .face_cap = 200000, .memoize_links = false};
    CHECK(is_homology_sphere(k, with).verdict ==
          is_homology_sphere(k, without).verdict);
    SimplicialComplex t = torus7();
    CHECK(is_homology_sphere(t, with).verdict ==
          is_homology_sphere(t, without).verdict);
}
