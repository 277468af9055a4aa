#include "k3acm/casework.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "k3acm/checked.hpp"
#include "k3acm/error.hpp"
#include "k3acm/invariants.hpp"

namespace k3acm {

namespace {

constexpr std::array<std::pair<ConstraintKind, std::string_view>, 5> kKindNames = {{
    {ConstraintKind::LinearIneq, "LinearIneq"},
    {ConstraintKind::QuadraticIneq, "QuadraticIneq"},
    {ConstraintKind::HodgeLower, "HodgeLower"},
    {ConstraintKind::AbsTAtLeast, "AbsTAtLeast"},
    {ConstraintKind::Custom, "Custom"},
}};

i64 abs64(i64 v) { return v < 0 ? checked::neg(v) : v; }

void require_rank2(const CaseSpec& spec)
{
    if (spec.lattice.rank() != 2)
        throw Error(Errc::BadParameters, "case '" + spec.tag + "': lattice must have rank 2");
}

// Right-hand side of the linear form C.against, after resolving HodgeLower.
i64 linear_rhs(const CaseSpec& spec, const Constraint& c)
{
    if (c.kind == ConstraintKind::HodgeLower)
        return hodge_lower(c.bound, self_int(spec.lattice, c.against));
    return c.bound;
}

Rel linear_rel(const Constraint& c)
{
    return c.kind == ConstraintKind::HodgeLower ? Rel::Ge : c.rel;
}

std::string polynomial(const std::vector<std::pair<i64, std::string_view>>& terms)
{
    std::ostringstream out;
    bool any = false;
    for (const auto& [k, v] : terms) {
        if (k == 0)
            continue;
        if (k < 0)
            out << '-';
        else if (any)
            out << '+';
        if (abs64(k) != 1)
            out << abs64(k);
        out << v;
        any = true;
    }
    if (!any)
        out << '0';
    return out.str();
}

std::string linear_form(i64 a, i64 b) { return polynomial({{a, "s"}, {b, "t"}}); }

std::string quadratic_form(i64 a, i64 b, i64 c)
{
    return polynomial({{a, "s^2"}, {b, "st"}, {c, "t^2"}});
}

Constraint linear(DivClass against, Rel rel, i64 bound, std::string rule, std::string cite)
{
    Constraint c;
    c.kind = ConstraintKind::LinearIneq;
    c.against = std::move(against);
    c.rel = rel;
    c.bound = bound;
    c.why = {std::move(rule), std::move(cite)};
    return c;
}

Constraint hodge(DivClass against, i64 c2min, std::string cite)
{
    Constraint c;
    c.kind = ConstraintKind::HodgeLower;
    c.against = std::move(against);
    c.rel = Rel::Ge;
    c.bound = c2min;
    c.why = {"AX-HODGE-INDEX", std::move(cite)};
    return c;
}

Constraint genus_at_least_3(std::size_t rank)
{
    Constraint c;
    c.kind = ConstraintKind::QuadraticIneq;
    c.against = DivClass::zero(rank);
    c.rel = Rel::Ge;
    c.bound = 4;
    c.why = {"HYP:genus", "g >= 3, so C^2 >= 4"};
    return c;
}

Constraint abs_t(std::size_t rank)
{
    Constraint c;
    c.kind = ConstraintKind::AbsTAtLeast;
    c.against = DivClass::zero(rank);
    c.bound = 2;
    c.why = {"HYP:|t|>=2", "|t| >= 2; |t| <= 1 is a twist of O_X or of B^{+-1}"};
    return c;
}

Constraint ch_bound(std::size_t rank)
{
    // C.H <= 12 follows from h^0(E) <= 8 and chi(E(-1)) >= 0 (lm_acm_bounds).
    return linear(DivClass::basis(rank, 0), Rel::Le, 12, "ARITH:lm_acm_bounds",
                  "C.H <= 12 for E_{C,Z} initialized and aCM");
}

}  // namespace

std::string_view to_string(ConstraintKind kind)
{
    for (const auto& [k, name] : kKindNames)
        if (k == kind)
            return name;
    return "?";
}

ConstraintKind constraint_kind_from_string(std::string_view text)
{
    for (const auto& [k, name] : kKindNames)
        if (name == text)
            return k;
    throw Error(Errc::ParseError, "unknown constraint kind '" + std::string(text) + "'");
}

DivClass case_class(const CaseSpec& spec, i64 s, i64 t)
{
    require_rank2(spec);
    return DivClass{s, t};
}

bool satisfies(const CaseSpec& spec, const Constraint& c, i64 s, i64 t)
{
    const Lattice& L = spec.lattice;
    const DivClass C = case_class(spec, s, t);
    switch (c.kind) {
    case ConstraintKind::LinearIneq:
    case ConstraintKind::HodgeLower:
        return holds(pair(L, C, c.against), linear_rel(c), linear_rhs(spec, c));
    case ConstraintKind::QuadraticIneq:
        return holds(self_int(L, C), c.rel, c.bound);
    case ConstraintKind::AbsTAtLeast:
        return abs64(t) >= c.bound;
    case ConstraintKind::Custom: {
        if (c.modulus <= 0)
            throw Error(Errc::BadParameters, "custom constraint needs a positive modulus");
        const i64 v = pair(L, C, c.against);
        const i64 r = checked::sub(v, checked::mul(checked::floor_div(v, c.modulus), c.modulus));
        const i64 want = checked::sub(
            c.residue, checked::mul(checked::floor_div(c.residue, c.modulus), c.modulus));
        return r == want;
    }
    }
    return false;
}

bool satisfies_all(const CaseSpec& spec, i64 s, i64 t)
{
    for (const auto& c : spec.constraints)
        if (!satisfies(spec, c, s, t))
            return false;
    return true;
}

std::string describe(const CaseSpec& spec, const Constraint& c)
{
    const Lattice& L = spec.lattice;
    const DivClass e0 = DivClass::basis(2, 0), e1 = DivClass::basis(2, 1);
    std::ostringstream out;
    switch (c.kind) {
    case ConstraintKind::LinearIneq:
    case ConstraintKind::HodgeLower:
        out << "C.(" << format_class(L, c.against)
            << ") = " << linear_form(pair(L, e0, c.against), pair(L, e1, c.against)) << ' '
            << to_string(linear_rel(c)) << ' ' << linear_rhs(spec, c);
        break;
    case ConstraintKind::QuadraticIneq:
        out << "C^2 = " << quadratic_form(self_int(L, e0), checked::mul(2, pair(L, e0, e1)),
                                          self_int(L, e1))
            << ' ' << to_string(c.rel) << ' ' << c.bound;
        break;
    case ConstraintKind::AbsTAtLeast:
        out << "|t| >= " << c.bound;
        break;
    case ConstraintKind::Custom:
        out << "C.(" << format_class(L, c.against) << ") = "
            << linear_form(pair(L, e0, c.against), pair(L, e1, c.against)) << " == " << c.residue
            << " mod " << c.modulus;
        break;
    }
    return out.str();
}

std::vector<Point> enumerate_case(const CaseSpec& spec)
{
    require_rank2(spec);
    if (spec.box < 16)
        throw Error(Errc::BadParameters, "search box must be at least 16, got " +
                                             std::to_string(spec.box));
    const Lattice& L = spec.lattice;
    const DivClass e0 = DivClass::basis(2, 0), e1 = DivClass::basis(2, 1);
    const i64 box = spec.box;

    i64 min_abs_t = 0;
    for (const auto& c : spec.constraints)
        if (c.kind == ConstraintKind::AbsTAtLeast)
            min_abs_t = std::max(min_abs_t, c.bound);

    // Linear constraints cut each row t to a union of s-intervals; the rest are
    // checked pointwise inside those intervals.
    struct Row {
        i64 a, b, rhs;
        Rel rel;
    };
    std::vector<Row> rows;
    for (const auto& c : spec.constraints)
        if (c.kind == ConstraintKind::LinearIneq || c.kind == ConstraintKind::HodgeLower)
            rows.push_back({pair(L, e0, c.against), pair(L, e1, c.against), linear_rhs(spec, c),
                            linear_rel(c)});

    std::vector<Point> out;
    for (i64 t = -box; t <= box; ++t) {
        if (abs64(t) < min_abs_t)
            continue;
        std::vector<Interval> s_range = {Interval{-box, box}};
        for (const auto& r : rows) {
            const i64 off = checked::sub(checked::mul(r.b, t), r.rhs);
            const auto f = r.a * PiecewiseLinear::identity() + PiecewiseLinear::constant(off);
            s_range = intersect(s_range, f.solve(r.rel));
            if (s_range.empty())
                break;
        }
        for (const auto& iv : s_range)
            for (i64 s = *iv.lo; s <= *iv.hi; ++s)
                if (satisfies_all(spec, s, t))
                    out.emplace_back(s, t);
    }
    std::sort(out.begin(), out.end());
    for (const auto& [s, t] : out)
        if (abs64(s) == box || abs64(t) == box)
            throw Error(Errc::BoxTooSmall, "solution (" + std::to_string(s) + "," +
                                               std::to_string(t) + ") touches the box " +
                                               std::to_string(box));
    return out;
}

Lattice quartic_lattice(i64 b2, i64 hb)
{
    return Lattice({{4, hb}, {hb, b2}}, {"h", "B"}, DivClass{1, 0}, true);
}

Lattice delpezzo_cover_lattice()
{
    IntMatrix g(8, std::vector<i64>(8, 0));
    g[0][0] = 2;
    for (int i = 1; i < 8; ++i)
        g[i][i] = -2;
    return Lattice(g, {"l", "e1", "e2", "e3", "e4", "e5", "e6", "e7"},
                   DivClass{3, -1, -1, -1, -1, -1, -1, -1}, true);
}

std::string preset_tag_for(i64 b2, i64 hb)
{
    if (b2 == -2 && hb == 1)
        return "i-a";
    if (b2 == -2 && hb == 2)
        return "i-b";
    if (b2 == -2 && hb == 3)
        return "i-c";
    if (b2 == 0 && hb == 4)
        return "ii";
    if (b2 == 4 && hb == 6)
        return "iii";
    return {};
}

CaseSpec lemma51_preset(const std::string& tag, const Lattice& L)
{
    if (L.rank() != 2)
        throw Error(Errc::BadParameters, "presets need a rank-2 lattice");
    const DivClass h{1, 0}, B{0, 1};
    CaseSpec spec{tag, L, {}, 32};
    auto& cs = spec.constraints;
    cs.push_back(ch_bound(2));
    if (tag == "i-a") {
        cs.push_back(linear(B, Rel::Ge, 0, "AX-CURVE-NONNEG", "C.B >= 0, C irreducible"));
        cs.push_back(linear(h - B, Rel::Ge, 1, "AX-2CONNECTED-POSITIVE",
                            "C.(h-B) > 0, |h-B| an elliptic pencil"));
    } else if (tag == "i-b") {
        cs.push_back(linear(B, Rel::Ge, 0, "AX-CURVE-NONNEG", "C.B >= 0, C irreducible"));
        cs.push_back(linear(h - B, Rel::Ge, 0, "AX-CURVE-NONNEG",
                            "C.(h-B) >= 0, h-B has the same invariants as B"));
    } else if (tag == "i-c") {
        cs.push_back(linear(B, Rel::Ge, 0, "AX-CURVE-NONNEG", "C.B >= 0, C irreducible"));
        cs.push_back(hodge(2 * h - B, 4, "C.(2h-B) >= 3: (2h-B)^2 = 2, C^2 >= 4"));
    } else if (tag == "ii") {
        cs.push_back(linear(B, Rel::Ge, 1, "AX-2CONNECTED-POSITIVE",
                            "C.B > 0, |B| an elliptic pencil"));
        cs.push_back(linear(2 * h - B, Rel::Ge, 1, "AX-2CONNECTED-POSITIVE",
                            "C.(2h-B) > 0, |2h-B| an elliptic pencil"));
    } else if (tag == "iii") {
        cs.push_back(hodge(B, 4, "C.B >= 4: B^2 = 4, C^2 >= 4"));
        cs.push_back(hodge(3 * h - B, 4, "C.(3h-B) >= 4: (3h-B)^2 = 4, C^2 >= 4"));
    } else {
        throw Error(Errc::BadParameters, "unknown preset '" + tag + "'");
    }
    cs.push_back(genus_at_least_3(2));
    cs.push_back(abs_t(2));
    return spec;
}

std::vector<CaseSpec> lemma51_presets()
{
    return {
        lemma51_preset("i-a", quartic_lattice(-2, 1)),
        lemma51_preset("i-b", quartic_lattice(-2, 2)),
        lemma51_preset("i-c", quartic_lattice(-2, 3)),
        lemma51_preset("ii", quartic_lattice(0, 4)),
        lemma51_preset("iii", quartic_lattice(4, 6)),
    };
}

CaseSpec without_abs_t(CaseSpec spec)
{
    std::erase_if(spec.constraints,
                  [](const Constraint& c) { return c.kind == ConstraintKind::AbsTAtLeast; });
    return spec;
}

}  // namespace k3acm
