#pragma once

#include "k3acm/lattice.hpp"

// Riemann-Roch numerology on a K3 surface and the numerical shadow of rank-2
// Lazarsfeld-Mukai bundles.
namespace k3acm {

struct BundleInvariants {
    i64 rank = 1;
    DivClass c1;
    i64 c2 = 0;

    friend bool operator==(const BundleInvariants&, const BundleInvariants&) = default;
};

// Numerical data of E_{C,Z} for a g^r_d on a curve of genus g.
struct LMInvariants {
    i64 g = 0;
    i64 r = 0;
    i64 d = 0;
    i64 h0 = 0;        // g - d + 1 + 2r
    i64 chi_end = 0;   // chi(E^v (x) E) = 2(1 - rho)
    i64 rho = 0;

    friend bool operator==(const LMInvariants&, const LMInvariants&) = default;
};

struct DegreeWindow {
    i64 d_min = 0;
    i64 d_max = 0;
    bool feasible = false;
};

// chi(O_X(D)) = 2 + D^2/2.
i64 chi_line(i64 d2);

// Arithmetic genus 1 + D^2/2.
i64 genus_of(i64 d2);

// chi(E) = 2 rk(E) + c1^2/2 - c2.
i64 chi_bundle(const BundleInvariants& inv, const Lattice& L);

// Rank-2 twist E -> E(L): c1 + 2L, c2 + c1.L + L^2.
BundleInvariants chern_twist(const BundleInvariants& inv, const DivClass& twist, const Lattice& L);

// rho(g, r, d) = g - (r+1)(g - d + r).
i64 brill_noether(i64 g, i64 r, i64 d);

LMInvariants lm_invariants(i64 g, i64 r, i64 d);

// chi(E_{C,Z}(-l)) = 4l^2 - l C.H + g + 3 - d for a pencil on a quartic.
i64 twist_chi(i64 l, i64 ch, i64 g, i64 d);

// Range of d compatible with E_{C,Z} initialized and aCM: g-5 <= d <= g+7-C.H.
DegreeWindow lm_acm_bounds(i64 g, i64 ch);

// h^0(O_X(lH) (x) J_Z) = chi(E(-l)) - h^0(O_X(lH - C)).
i64 hilbert_ideal_Z(i64 l, i64 chi_l, i64 h0_lh_minus_c);

// Least positive m with m^2 >= c2min * d2.
i64 hodge_lower(i64 c2min, i64 d2);

}  // namespace k3acm
