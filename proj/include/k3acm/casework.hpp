#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3acm/lattice.hpp"
#include "k3acm/piecewise.hpp"

// Exhaustive search over C = s*e0 + t*e1 in a rank-2 lattice, where e0 is the
// hyperplane class and e1 the aCM class B.
namespace k3acm {

enum class ConstraintKind { LinearIneq, QuadraticIneq, HodgeLower, AbsTAtLeast, Custom };
std::string_view to_string(ConstraintKind kind);
ConstraintKind constraint_kind_from_string(std::string_view text);

struct Justification {
    std::string rule;  // axiom id, or HYP:/ARITH: tag for hypotheses and computed bounds
    std::string cite;
    friend bool operator==(const Justification&, const Justification&) = default;
};

// LinearIneq:    C.against rel bound
// QuadraticIneq: C^2 rel bound
// HodgeLower:    C.against >= hodge_lower(bound, against^2)
// AbsTAtLeast:   |t| >= bound
// Custom:        C.against == residue (mod modulus)
struct Constraint {
    ConstraintKind kind = ConstraintKind::LinearIneq;
    DivClass against;
    Rel rel = Rel::Ge;
    i64 bound = 0;
    i64 modulus = 0;
    i64 residue = 0;
    Justification why;
    friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct CaseSpec {
    std::string tag;
    Lattice lattice;
    std::vector<Constraint> constraints;
    i64 box = 32;
    friend bool operator==(const CaseSpec&, const CaseSpec&) = default;
};

using Point = std::pair<i64, i64>;

DivClass case_class(const CaseSpec& spec, i64 s, i64 t);
bool satisfies(const CaseSpec& spec, const Constraint& c, i64 s, i64 t);
bool satisfies_all(const CaseSpec& spec, i64 s, i64 t);
// Renders "C.(h-B) = 3s+3t >= 1" style text.
std::string describe(const CaseSpec& spec, const Constraint& c);

// All box points meeting every constraint, sorted by (s,t). Throws BadParameters
// if box < 16 or the lattice is not rank 2; BoxTooSmall if a solution touches the
// boundary.
std::vector<Point> enumerate_case(const CaseSpec& spec);

// Quartic Picard lattice [[4, hb], [hb, b2]] with labels h, B.
Lattice quartic_lattice(i64 b2, i64 hb);
// diag(2, -2 x7) with labels l, e1..e7 and ample 3l - sum e_i.
Lattice delpezzo_cover_lattice();

// i-a, i-b, i-c, ii, iii on their canonical lattices.
std::vector<CaseSpec> lemma51_presets();
// The preset with this tag, built on L (constraints are derived from L's form).
CaseSpec lemma51_preset(const std::string& tag, const Lattice& L);
// Preset tag for (B^2, h.B); empty if none applies.
std::string preset_tag_for(i64 b2, i64 hb);
// Drops AbsTAtLeast constraints.
CaseSpec without_abs_t(CaseSpec spec);

}  // namespace k3acm
