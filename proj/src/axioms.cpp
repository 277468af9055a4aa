#include "k3acm/axioms.hpp"

#include "k3acm/error.hpp"

namespace k3acm {

const std::vector<AxiomInfo>& axiom_registry()
{
    static const std::vector<AxiomInfo> registry = {
        {"AX-SERRE", "Serre duality on a K3 surface: h^i(E) = h^{2-i}(E^v)."},
        {"AX-H1NONNEG", "Cohomology dimensions are non-negative: h^1 >= 0."},
        {"AX-2CONNECTED",
         "Every member of a base point free |L| with L^2 > 0 is 2-connected: D1.D2 >= 2 for "
         "each effective decomposition."},
        {"AX-2CONNECTED-POSITIVE",
         "Positivity form of the connectedness statement: an irreducible curve with C^2 > 0 "
         "meets every nonzero moving class positively (C.D >= 1)."},
        {"AX-ELLIPTIC-H1", "For an elliptic pencil |F|, h^1(kF) = k - 1."},
        {"AX-VA-DEGREE3",
         "For h very ample and D nonzero with D^2 >= 0, h.D > 0: |D| is nonempty and h.D >= 3; "
         "D^2 = 0 with h.D = 3 is an elliptic pencil."},
        {"AX-INITIALIZED-CRIT",
         "E_{C,Z} initialized: h^0(E(-1)) = h^0(O_X(C-H) (x) J_Z) = 0; no subsheaf of E(-1) has "
         "sections."},
        {"AX-BPF-ACM", "An initialized aCM line bundle B with B^2 >= 2 is base point free."},
        {"AX-ACM-VANISH",
         "aCM: h^1(E(l)) = 0 for all l; initialized: h^0(E(-1)) = 0; an aCM line bundle has "
         "h^1 = 0."},
        {"AX-ULRICH-BOUND", "An initialized aCM bundle satisfies h^0(E) <= 4 rk(E)."},
        {"AX-LM-INVARIANTS",
         "Lazarsfeld-Mukai bundle of a pencil: c1 = C, c2 = d, h^1 = h^2 = 0, h^0 = g - d + 1 + 2r."},
        {"AX-CURVE-NONNEG",
         "An irreducible curve C meets an effective divisor not containing it non-negatively."},
        {"AX-HODGE-INDEX",
         "The Picard lattice has signature (1, rho-1): D1^2 D2^2 <= (D1.D2)^2 when both squares "
         "are positive."},
        {"AX-RR-EFFECTIVE",
         "Riemann-Roch: D^2 >= -2 and h.D > 0 imply |D| nonempty; a nonzero D with D^2 >= -2 "
         "has h.D != 0."},
        {"AX-1CONNECTED-H1", "A 1-connected effective D satisfies h^1(O_X(D)) = h^1(O_X(-D)) = 0."},
        {"AX-NONSIMPLE-PAIR",
         "E_{C,Z} not simple (rho < 0): line bundles M, N with h^0 >= 2, N base point free, "
         "0 -> M -> E -> N (x) J_{Z'} -> 0, M.N + len(Z') = d, M^2 >= N^2, and h^0(M-N) > 0 "
         "unless E = M + N."},
        {"AX-GONAL-PAIR",
         "For a gonality pencil with rho < 0 the destabilizing sequence has Z' empty: "
         "0 -> M -> E -> N -> 0 with M.N = d and h^1(M) = h^1(N) = 0."},
        {"AX-NONSIMPLE-RHO0",
         "The rho = 0 boundary case: C in |2N + Delta| for a (-2)-curve Delta with N.Delta = 1."},
        {"AX-INDECOMPOSABLE", "E_{C,Z} is indecomposable (hypothesis)."},
        {"AX-SPLITTING-P1", "Every vector bundle on P^1 splits as a sum of line bundles O(a_i)."},
        {"AX-RATIONAL-CURVE", "A class B with B^2 = -2 and h.B = 1 is represented by a smooth rational curve."},
        {"AX-PENCIL-DEGREE2", "A base point free pencil on a curve of positive genus has degree >= 2."},
        {"AX-SERRE-EXTENSION",
         "Z is Cayley-Bacharach for O(C): 0 -> O_X -> E_{C,Z} -> O_X(C) (x) J_Z -> 0."},
        {"AX-LM-SPLIT-EXIST",
         "For B base point free with h^1(B) = 0 there is C1 in |2B| with a degree-4 pencil and "
         "E_{C1,Z1} = B + B."},
        {"AX-GONALITY-2B", "Curves in |2B| (B^2 = 4, h.B = 6) have minimal gonality 4."},
        {"AX-ELLIPTIC-EVEN",
         "On an even Picard lattice, a class with square 0 and degree 4 against h very ample "
         "is an elliptic pencil."},
        {"AX-NONSPLIT-EXT", "h^1(L) != 0 gives a non-split extension in Ext^1."},
    };
    return registry;
}

bool is_known_axiom(std::string_view id)
{
    for (const auto& a : axiom_registry())
        if (a.id == id)
            return true;
    return false;
}

const AxiomInfo& axiom(std::string_view id)
{
    for (const auto& a : axiom_registry())
        if (a.id == id)
            return a;
    throw Error(Errc::MalformedScript, "unknown axiom id '" + std::string(id) + "'");
}

}  // namespace k3acm
