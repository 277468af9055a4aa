#include "k3acm/acm.hpp"

#include "k3acm/error.hpp"

namespace k3acm {

namespace {

bool asserts_sections(AssumptionKind k)
{
    return k != AssumptionKind::Empty;
}

// The two decidable rules: D^2 >= -2 with positive degree has sections; a
// nonzero class of non-positive degree has none.
Effectivity rule_verdict(const Lattice& L, const DivClass& d, std::string* reason)
{
    if (d.is_zero()) {
        *reason = "zero-class";
        return Effectivity::Effective;
    }
    const i64 deg = degree(L, d);
    if (deg <= 0) {
        *reason = "nonpositive-degree";
        return Effectivity::Empty;
    }
    if (self_int(L, d) >= -2) {
        *reason = "riemann-roch-ample";
        return Effectivity::Effective;
    }
    return Effectivity::Unknown;
}

}  // namespace

std::string_view to_string(AssumptionKind kind)
{
    switch (kind) {
    case AssumptionKind::Effective: return "Effective";
    case AssumptionKind::Empty: return "Empty";
    case AssumptionKind::IrreducibleCurve: return "IrreducibleCurve";
    case AssumptionKind::EllipticPencil: return "EllipticPencil";
    case AssumptionKind::BasePointFree: return "BasePointFree";
    }
    return "?";
}

AssumptionKind assumption_kind_from_string(std::string_view text)
{
    for (auto k : {AssumptionKind::Effective, AssumptionKind::Empty,
                   AssumptionKind::IrreducibleCurve, AssumptionKind::EllipticPencil,
                   AssumptionKind::BasePointFree})
        if (to_string(k) == text)
            return k;
    throw Error(Errc::ParseError, "unknown assumption kind '" + std::string(text) + "'");
}

std::string_view to_string(Effectivity value)
{
    switch (value) {
    case Effectivity::Effective: return "Effective";
    case Effectivity::Empty: return "Empty";
    case Effectivity::Unknown: return "Unknown";
    }
    return "?";
}

std::string_view to_string(AcmStatus status)
{
    switch (status) {
    case AcmStatus::NotAcm: return "NotAcm";
    case AcmStatus::Acm: return "Acm";
    case AcmStatus::AcmUlrich: return "AcmUlrich";
    case AcmStatus::NeedsAssumption: return "NeedsAssumption";
    }
    return "?";
}

std::string_view to_string(AcmCase tag)
{
    switch (tag) {
    case AcmCase::a: return "a";
    case AcmCase::b: return "b";
    case AcmCase::c: return "c";
    case AcmCase::d: return "d";
    case AcmCase::none: return "none";
    }
    return "?";
}

std::string_view to_string(Tristate value)
{
    switch (value) {
    case Tristate::Yes: return "Yes";
    case Tristate::No: return "No";
    case Tristate::Unknown: return "Unknown";
    }
    return "?";
}

void check_assumptions(const Lattice& L, const Assumptions& assumptions)
{
    for (const auto& a : assumptions)
        if (a.subject.size() != L.rank())
            throw Error(Errc::DimensionMismatch, "assumption subject has " +
                                                     std::to_string(a.subject.size()) +
                                                     " coordinates, lattice rank is " +
                                                     std::to_string(L.rank()));
    for (std::size_t i = 0; i < assumptions.size(); ++i) {
        const auto& a = assumptions[i];
        for (std::size_t j = i + 1; j < assumptions.size(); ++j) {
            const auto& b = assumptions[j];
            if (a.subject == b.subject && asserts_sections(a.kind) != asserts_sections(b.kind))
                throw Error(Errc::ConflictingAssumptions,
                            "class " + format_class(L, a.subject) +
                                " is asserted both to have sections and to be empty");
        }
        std::string reason;
        const Effectivity forced = rule_verdict(L, a.subject, &reason);
        const bool wants_sections = asserts_sections(a.kind);
        if ((forced == Effectivity::Effective && !wants_sections) ||
            (forced == Effectivity::Empty && wants_sections))
            throw Error(Errc::ConflictingAssumptions,
                        "assumption " + std::string(to_string(a.kind)) + " on " +
                            format_class(L, a.subject) + " contradicts rule " + reason);
    }
}

Verdict effectivity(const Lattice& L, const DivClass& d, const Assumptions& assumptions)
{
    if (d.size() != L.rank())
        throw Error(Errc::DimensionMismatch, "class length does not match lattice rank");
    check_assumptions(L, assumptions);

    Verdict v;
    v.value = rule_verdict(L, d, &v.reason);
    if (v.value != Effectivity::Unknown)
        return v;
    for (const auto& a : assumptions) {
        if (a.subject != d)
            continue;
        v.value = asserts_sections(a.kind) ? Effectivity::Effective : Effectivity::Empty;
        v.reason = "assumption:" + std::string(to_string(a.kind));
        return v;
    }
    v.reason = "undecided";
    return v;
}

AcmClassification is_initialized_acm(const Lattice& L, const DivClass& b,
                                     const Assumptions& assumptions)
{
    if (b.size() != L.rank())
        throw Error(Errc::DimensionMismatch, "class length does not match lattice rank");
    if (b.is_zero())
        throw Error(Errc::TrivialClass, "the trivial bundle is excluded");
    if (effectivity(L, b, assumptions).value == Effectivity::Empty)
        throw Error(Errc::NotEffectiveCandidate, "|" + format_class(L, b) + "| is empty");

    const i64 b2 = self_int(L, b);
    const i64 hb = degree(L, b);

    AcmClassification out;
    if (b2 == -2 && hb >= 1 && hb <= 3) {
        out.status = AcmStatus::Acm;
        out.case_tag = AcmCase::a;
    } else if (b2 == 0 && (hb == 3 || hb == 4)) {
        out.status = AcmStatus::Acm;
        out.case_tag = AcmCase::b;
    } else if (b2 == 2 && hb == 5) {
        out.status = AcmStatus::Acm;
        out.case_tag = AcmCase::c;
    } else if (b2 == 4 && hb == 6) {
        const DivClass& h = L.ample();
        const DivClass conditions[] = {b - h, 2 * h - b};
        bool contradicted = false;
        for (const auto& cls : conditions) {
            const Verdict v = effectivity(L, cls, assumptions);
            if (v.value == Effectivity::Effective)
                contradicted = true;
            else if (v.value == Effectivity::Unknown)
                out.missing.push_back(
                    {cls, AssumptionKind::Empty, "|" + format_class(L, cls) + "| = empty"});
        }
        if (contradicted) {
            out.status = AcmStatus::NotAcm;
            out.case_tag = AcmCase::none;
            out.missing.clear();
        } else if (out.missing.empty()) {
            out.status = AcmStatus::AcmUlrich;
            out.case_tag = AcmCase::d;
        } else {
            out.status = AcmStatus::NeedsAssumption;
            out.case_tag = AcmCase::d;
        }
    }
    return out;
}

std::vector<Companion> acm_companions(const Lattice& L, const DivClass& b,
                                      const AcmClassification& classification,
                                      const Assumptions& assumptions)
{
    if (!classification.initialized_acm())
        throw Error(Errc::NotAcmInput, format_class(L, b) + " is not classified initialized aCM");
    const DivClass& h = L.ample();
    const i64 b2 = self_int(L, b);
    const i64 hb = degree(L, b);

    std::vector<Companion> out;
    out.push_back({-b, "dual", {}});
    auto add = [&](DivClass cls, std::string rule) {
        AcmClassification c = is_initialized_acm(L, cls, assumptions);
        if (!c.initialized_acm())
            throw Error(Errc::PreconditionViolated,
                        "companion " + format_class(L, cls) + " (" + rule +
                            ") did not re-classify as initialized aCM");
        out.push_back({std::move(cls), std::move(rule), std::move(c)});
    };
    if (b2 == -2 && (hb == 1 || hb == 2))
        add(h - b, "h-B");
    if (b2 == 2 || (b2 == 0 && hb == 4) || (b2 == -2 && hb == 3))
        add(2 * h - b, "2h-B");
    if (b2 == 4)
        add(3 * h - b, "3h-B");
    return out;
}

Tristate is_elliptic_pencil_class(const Lattice& L, const DivClass& d,
                                  const Assumptions& assumptions)
{
    if (d.size() != L.rank())
        throw Error(Errc::DimensionMismatch, "class length does not match lattice rank");
    for (const auto& a : assumptions)
        if (a.kind == AssumptionKind::EllipticPencil && a.subject == d)
            return Tristate::Yes;
    if (self_int(L, d) != 0)
        return Tristate::No;
    if (degree(L, d) == 3)
        return Tristate::Yes;
    return Tristate::Unknown;
}

}  // namespace k3acm
