#include "doctest.h"

#include <random>

#include "k3acm/casework.hpp"
#include "k3acm/error.hpp"
#include "k3acm/invariants.hpp"
#include "oracles.hpp"

using namespace k3acm;

TEST_CASE("line bundle Euler characteristic and genus")
{
    CHECK(chi_line(0) == 2);
    CHECK(chi_line(-4) == 0);
    CHECK(chi_line(8) == 6);
    CHECK(genus_of(24) == 13);
    CHECK(genus_of(-2) == 0);
    CHECK(genus_of(20) == 11);
    CHECK_THROWS_AS(chi_line(3), Error);
    CHECK_THROWS_AS(genus_of(-1), Error);
}

TEST_CASE("bundle Euler characteristic")
{
    const Lattice L = quartic_lattice(-2, 2);
    CHECK(chi_bundle({2, DivClass{0, 0}, 2}, L) == 2);
    CHECK(chi_bundle({2, parse_class(L, "2h+2B"), 8}, L) == 8);
    CHECK(chi_bundle({2, parse_class(L, "2h+2B"), 8}, L) == twist_chi(0, 12, 13, 8));
    for (i64 a = -6; a <= 6; ++a)
        for (i64 b = -6; b <= 6; ++b) {
            const DivClass c{a, b};
            REQUIRE(chi_bundle({1, c, 0}, L) == chi_line(self_int(L, c)));
        }
}

TEST_CASE("rank-2 twists")
{
    const Lattice L = quartic_lattice(-2, 2);
    const BundleInvariants e{2, parse_class(L, "2h+2B"), 8};
    const BundleInvariants t = chern_twist(e, parse_class(L, "-h-B"), L);
    CHECK(t.c1 == DivClass{0, 0});
    CHECK(t.c2 == 2);
    CHECK(chern_twist(e, DivClass{0, 0}, L) == e);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const DivClass x(oracle::random_vector(rng, 2, -10, 10));
        REQUIRE(chern_twist(chern_twist(e, x, L), -x, L) == e);
    }
    CHECK_THROWS_AS(chern_twist({1, DivClass{1, 0}, 0}, DivClass{1, 0}, L), Error);
}

TEST_CASE("Brill-Noether numbers and Lazarsfeld-Mukai invariants")
{
    CHECK(brill_noether(9, 1, 4) == -3);
    CHECK(brill_noether(11, 1, 6) == -1);
    CHECK(brill_noether(4, 1, 3) == 0);

    CHECK(lm_invariants(13, 1, 8).h0 == 8);
    const LMInvariants e = lm_invariants(9, 1, 4);
    CHECK(e.h0 == 8);
    CHECK(e.rho == -3);
    CHECK(e.chi_end == 8);
    CHECK(lm_invariants(5, 1, 2).h0 == 6);
    CHECK(lm_invariants(5, 1, 2).rho == -3);
    CHECK_THROWS_AS(lm_invariants(1, 1, 1), Error);
    CHECK_THROWS_AS(lm_invariants(5, 0, 1), Error);
}

TEST_CASE("twisted Euler characteristics")
{
    for (i64 d = 1; d <= 12; ++d) {
        CHECK(twist_chi(1, 12, 13, d) == 8 - d);
        CHECK(twist_chi(1, 10, 5, d) == 2 - d);
    }
}

TEST_CASE("consistency: twist_chi at l = 0 is h0 of the pencil bundle")
{
    for (i64 g = 3; g <= 20; ++g)
        for (i64 d = 1; d <= 20; ++d) {
            REQUIRE(twist_chi(0, 7, g, d) == g - d + 3);
            REQUIRE(twist_chi(0, -3, g, d) == lm_invariants(g, 1, d).h0);
        }
}

TEST_CASE("consistency: chi of twists by -l h matches the closed form")
{
    struct Case {
        i64 b2, hb;
        const char* c;
        i64 d;
    };
    const Case cases[] = {{-2, 2, "2h+2B", 8}, {-2, 2, "4h-2B", 8}, {-2, 3, "4h-2B", 2},
                          {0, 4, "h+2B", 6},   {0, 4, "5h-2B", 6},  {4, 6, "2B", 4},
                          {4, 6, "6h-2B", 4}};
    for (const auto& cs : cases) {
        const Lattice L = quartic_lattice(cs.b2, cs.hb);
        const DivClass c = parse_class(L, cs.c);
        const i64 g = genus_of(self_int(L, c));
        const i64 ch = degree(L, c);
        const BundleInvariants e{2, c, cs.d};
        for (i64 l = -4; l <= 4; ++l) {
            const BundleInvariants t = chern_twist(e, -l * L.ample(), L);
            REQUIRE(chi_bundle(t, L) == twist_chi(l, ch, g, cs.d));
            REQUIRE(chern_twist(t, l * L.ample(), L) == e);
        }
    }
}

TEST_CASE("degree window")
{
    const DegreeWindow a = lm_acm_bounds(13, 12);
    CHECK(a.d_min == 8);
    CHECK(a.d_max == 8);
    CHECK(a.feasible);
    const DegreeWindow b = lm_acm_bounds(9, 12);
    CHECK(b.d_min == 4);
    CHECK(b.d_max == 4);
    CHECK_FALSE(lm_acm_bounds(3, 13).feasible);
    for (i64 g = 3; g <= 30; ++g)
        for (i64 ch = 1; ch <= 20; ++ch) {
            const DegreeWindow w = lm_acm_bounds(g, ch);
            REQUIRE(w.feasible == (ch <= 12));
            for (i64 d = std::max<i64>(1, w.d_min); d <= w.d_max; ++d)
                REQUIRE(lm_invariants(g, 1, d).h0 <= 8);
        }
}

TEST_CASE("Hilbert function of the ideal of Z")
{
    CHECK(hilbert_ideal_Z(1, 8 - 8, 0) == 0);
    CHECK(hilbert_ideal_Z(3, 5, 5) == 0);
    // 4*4 - 2*12 + 13 + 3 - 8
    CHECK(twist_chi(2, 12, 13, 8) == 0);
    const Lattice L = quartic_lattice(-2, 2);
    CHECK(degree(L, 2 * L.ample() - parse_class(L, "2h+2B")) == -4);
    CHECK(hilbert_ideal_Z(2, twist_chi(2, 12, 13, 8), 0) == 0);
    CHECK(hilbert_ideal_Z(3, twist_chi(3, 12, 13, 8), 0) == 8);
    CHECK_THROWS_AS(hilbert_ideal_Z(1, 1, 2), Error);
    CHECK_THROWS_AS(hilbert_ideal_Z(1, 1, -1), Error);
}

TEST_CASE("Hodge lower bound")
{
    CHECK(hodge_lower(4, 2) == 3);
    CHECK(hodge_lower(4, 4) == 4);
    CHECK(hodge_lower(20, 4) == 9);
    CHECK_THROWS_AS(hodge_lower(0, 4), Error);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 2000; ++i) {
        const auto ab = oracle::random_vector(rng, 2, 1, 1000000);
        const i64 m = hodge_lower(ab[0], ab[1]);
        REQUIRE(m == oracle::least_root(ab[0] * ab[1]));
    }
}
