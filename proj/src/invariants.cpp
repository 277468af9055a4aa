#include "k3acm/invariants.hpp"

#include "k3acm/checked.hpp"
#include "k3acm/error.hpp"

namespace k3acm {

namespace {

i64 half_even(i64 d2)
{
    if (d2 % 2 != 0)
        throw Error(Errc::OddSquare, "self-intersection " + std::to_string(d2) + " is odd");
    return d2 / 2;
}

}  // namespace

i64 chi_line(i64 d2) { return checked::add(2, half_even(d2)); }

i64 genus_of(i64 d2) { return checked::add(1, half_even(d2)); }

i64 chi_bundle(const BundleInvariants& inv, const Lattice& L)
{
    const i64 c1sq = self_int(L, inv.c1);
    return checked::sub(checked::add(checked::mul(2, inv.rank), half_even(c1sq)), inv.c2);
}

BundleInvariants chern_twist(const BundleInvariants& inv, const DivClass& twist, const Lattice& L)
{
    if (inv.rank != 2)
        throw Error(Errc::UnsupportedRank, "twist formulas are implemented for rank 2, got rank " +
                                               std::to_string(inv.rank));
    BundleInvariants out;
    out.rank = 2;
    out.c1 = inv.c1 + 2 * twist;
    out.c2 = checked::add(checked::add(inv.c2, pair(L, inv.c1, twist)), self_int(L, twist));
    return out;
}

i64 brill_noether(i64 g, i64 r, i64 d)
{
    using namespace checked;
    return sub(g, mul(add(r, 1), add(sub(g, d), r)));
}

LMInvariants lm_invariants(i64 g, i64 r, i64 d)
{
    if (g < 2 || r < 1 || d < 1)
        throw Error(Errc::BadParameters, "need g >= 2, r >= 1, d >= 1; got (" + std::to_string(g) +
                                             "," + std::to_string(r) + "," + std::to_string(d) +
                                             ")");
    using namespace checked;
    LMInvariants inv;
    inv.g = g;
    inv.r = r;
    inv.d = d;
    inv.h0 = add(add(sub(g, d), 1), mul(2, r));
    inv.rho = brill_noether(g, r, d);
    inv.chi_end = mul(2, sub(1, inv.rho));
    return inv;
}

i64 twist_chi(i64 l, i64 ch, i64 g, i64 d)
{
    using namespace checked;
    return sub(add(add(sub(mul(4, mul(l, l)), mul(l, ch)), g), 3), d);
}

DegreeWindow lm_acm_bounds(i64 g, i64 ch)
{
    // h^0(E) = g + 3 - d <= 4 rk(E) = 8 gives the lower end; h^2(E(-1)) >= 0 the upper.
    DegreeWindow w;
    w.d_min = checked::sub(g, 5);
    w.d_max = checked::sub(checked::add(g, 7), ch);
    w.feasible = w.d_min <= w.d_max;
    return w;
}

i64 hilbert_ideal_Z(i64 l, i64 chi_l, i64 h0_lh_minus_c)
{
    if (h0_lh_minus_c < 0 || chi_l < h0_lh_minus_c)
        throw Error(Errc::NegativeDimension,
                    "l=" + std::to_string(l) + ": chi=" + std::to_string(chi_l) +
                        " < h0(lH-C)=" + std::to_string(h0_lh_minus_c));
    return chi_l - h0_lh_minus_c;
}

i64 hodge_lower(i64 c2min, i64 d2)
{
    if (c2min <= 0 || d2 <= 0)
        throw Error(Errc::PreconditionViolated, "hodge_lower needs positive arguments");
    return std::max<i64>(1, checked::isqrt_ceil(checked::mul(c2min, d2)));
}

}  // namespace k3acm
