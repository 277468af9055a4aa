#pragma once

#include <string>
#include <vector>

#include "k3acm/acm.hpp"
#include "k3acm/lattice.hpp"
#include "k3acm/piecewise.hpp"

// Numerical elimination of destabilizing pairs (M, N), M = C - N, for a
// non-simple E_{C,Z} of a pencil of degree d. C lies in the given rank-2
// lattice; N may lie in a larger Picard lattice and is known only through its
// pairings with the basis and its square.
namespace k3acm {

enum class PairMode {
    NotSimple,      // 0 -> M -> E -> N (x) J_Z' -> 0, M.N + len(Z') = d
    GonalPencil,    // Z' empty, M.N = d
    GonalityBelow,  // Z' empty, 1 <= M.N <= d - 1 (no pencil of degree < d)
};
std::string_view to_string(PairMode mode);
PairMode pair_mode_from_string(std::string_view text);

struct NumericClaim {
    std::string statement;
    i64 lhs = 0;
    Rel rel = Rel::Eq;
    i64 rhs = 0;
    std::string rule;  // axiom id or structural tag
    bool verified() const { return holds(lhs, rel, rhs); }
};

struct PairCandidate {
    std::vector<i64> pairing;  // N.e_i for the basis e_i
    i64 n_sq = 0;         // N^2
    i64 h_n = 0;          // h.N
    i64 c_n = 0;          // C.N
    i64 m_n = 0;          // M.N
    i64 m_sq = 0;         // M^2
    i64 multiplicity = 1; // r with N = rF when N^2 = 0
    i64 len_zprime = 0;
    std::string rule;     // elimination rule, or "unresolved"
    std::string axiom;
    std::vector<NumericClaim> claims;
    bool eliminated() const { return rule != "unresolved"; }
};

struct PairElimination {
    DivClass c;
    i64 d = 0;
    PairMode mode = PairMode::NotSimple;
    i64 n_square = 0;
    bool aggregate = false;  // covers every N^2 >= n_square
    i64 len_zprime = 0;      // largest len(Z') among candidates
    std::string outcome;     // empty-region, degree-bound, hodge-square-bound,
                             // all-candidates-eliminated, unresolved
    std::vector<NumericClaim> trace;
    std::vector<PairCandidate> candidates;
    std::vector<std::string> missing;  // facts that would settle unresolved candidates
    bool unresolved() const { return outcome == "unresolved"; }
};

// One record per even N^2 in [0, C^2/4] plus an aggregate record for larger N^2.
// Throws UnsupportedRank unless rank 2, PreconditionViolated unless C^2 >= 4 and d >= 1.
std::vector<PairElimination> enumerate_destabilizing(const Lattice& L, const DivClass& c, i64 d,
                                                     const Assumptions& assumptions,
                                                     PairMode mode = PairMode::NotSimple);

i64 unresolved_count(const std::vector<PairElimination>& records);

}  // namespace k3acm
