#pragma once

#include <random>

#include "k3acm/casework.hpp"
#include "oracles.hpp"

namespace gen {

using namespace k3acm;

// Rank-2 quartic form, two two-sided linear strips and up to four extra
// constraints of any kind.
inline k3acm::CaseSpec random_spec(std::mt19937_64& rng)
{
    static const std::pair<i64, i64> forms[] = {{-2, 1}, {-2, 2}, {-2, 3}, {0, 3},
                                                {0, 4},  {2, 5},  {4, 6},  {-4, 2}};
    auto pick = [&](i64 lo, i64 hi) { return oracle::random_vector(rng, 1, lo, hi)[0]; };
    const auto [b2, hb] = forms[pick(0, 7)];
    CaseSpec spec{"random", quartic_lattice(b2, hb), {}, pick(16, 40)};
    const Rel rels[] = {Rel::Le, Rel::Lt, Rel::Ge, Rel::Gt, Rel::Eq, Rel::Ne};
    // two two-sided strips bound a parallelogram most of the time
    for (int k = 0; k < 2; ++k) {
        const DivClass a(oracle::random_vector(rng, 2, -3, 3));
        const i64 lo = pick(-60, 20);
        spec.constraints.push_back({ConstraintKind::LinearIneq, a, Rel::Ge, lo, 0, 0, {"T", ""}});
        spec.constraints.push_back(
            {ConstraintKind::LinearIneq, a, Rel::Le, lo + pick(0, 80), 0, 0, {"T", ""}});
    }
    const int extras = static_cast<int>(pick(0, 4));
    for (int k = 0; k < extras; ++k) {
        Constraint c{ConstraintKind::LinearIneq, DivClass(oracle::random_vector(rng, 2, -4, 4)),
                     rels[pick(0, 5)], pick(-30, 30), 0, 0, {"T", ""}};
        switch (pick(0, 4)) {
        case 0: break;
        case 1:
            c.kind = ConstraintKind::QuadraticIneq;
            c.bound = 2 * pick(-10, 20);
            break;
        case 2:
            c.kind = ConstraintKind::HodgeLower;
            c.against = DivClass{1, 0};
            c.bound = pick(1, 30);
            break;
        case 3:
            c.kind = ConstraintKind::AbsTAtLeast;
            c.bound = pick(0, 4);
            break;
        case 4:
            c.kind = ConstraintKind::Custom;
            c.modulus = pick(2, 5);
            c.residue = pick(-5, 5);
            break;
        }
        spec.constraints.push_back(c);
    }
    return spec;
}

}  // namespace gen
