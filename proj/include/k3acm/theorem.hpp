#pragma once

#include <string>
#include <vector>

#include "k3acm/acm.hpp"
#include "k3acm/casework.hpp"
#include "k3acm/script.hpp"

// Necessity direction of the classification of aCM line bundles O_X(C) with C in
// Zh + ZB: every admissible (s, t) is either a twist of an aCM companion of B or
// is refuted by a contradiction script.
namespace k3acm {

struct Reduction {
    std::string rule;   // "h-B" or "2h-B"; empty when B is used as given
    DivClass new_b;     // in the coordinates of the input lattice
    i64 b2 = 0;         // invariants after the reduction
    i64 hb = 0;
};

// A |t| <= 1 point, resolved when C - X is a multiple of h for X = B or one of
// its companions.
struct SmallTPoint {
    Point st;
    bool resolved = false;
    std::string via;    // "O_X", "B", or the companion rule
    i64 twist = 0;      // C = twist*h + X
    std::string x;      // X in the basis h, B' of the reduced lattice
};

struct SurvivorCheck {
    Point st;
    std::string script;  // empty if none matches
    std::vector<DerivationReport> reports;  // the script, then its dependencies
    bool success = false;
};

struct TheoremReport {
    i64 b2 = 0;
    i64 hb = 0;
    AcmClassification classification;
    Reduction reduction;
    std::string preset;
    std::vector<Point> survivors;
    std::vector<SurvivorCheck> checks;
    std::vector<SmallTPoint> small_t;
    std::vector<std::string> unmatched;
    bool verified = false;

    std::string status() const { return verified ? "VERIFIED" : "INCOMPLETE"; }
};

// L must be rank 2 with {ample, b} a basis. Throws UnsupportedRank,
// PreconditionViolated (basis not unimodular), or NotAcmInput when b is not
// classified initialized aCM.
TheoremReport verify_theorem_necessity(const Lattice& L, const DivClass& b,
                                       const Assumptions& assumptions);

// b defaults to the second basis vector.
TheoremReport verify_theorem_necessity(const Lattice& L, const Assumptions& assumptions);

}  // namespace k3acm
