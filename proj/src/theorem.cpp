#include "k3acm/theorem.hpp"

#include <cstdlib>
#include <set>

#include "k3acm/builtin.hpp"
#include "k3acm/error.hpp"

namespace k3acm {

namespace {

Assumptions transform(const BasisChange& bc, const Assumptions& in)
{
    Assumptions out;
    for (const auto& a : in)
        out.push_back({bc.to_new(a.subject), a.kind, a.note});
    return out;
}

// Runs `tag` and, recursively, what it depends on; every report must succeed.
void run_with_depends(const DerivationScript& script, const Lattice& L,
                      const Assumptions& assumptions, std::set<std::string>& seen,
                      std::vector<DerivationReport>& reports)
{
    if (!seen.insert(script.tag).second)
        return;
    reports.push_back(run_script(rebase(script, L, assumptions)));
    for (const auto& dep : script.depends) {
        auto d = find_builtin(dep);
        if (!d) {
            DerivationReport missing;
            missing.tag = dep;
            missing.final_line = "FAILED: no builtin script " + dep;
            reports.push_back(std::move(missing));
            continue;
        }
        run_with_depends(*d, L, assumptions, seen, reports);
    }
}

std::string point_text(const Point& p)
{
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

}  // namespace

TheoremReport verify_theorem_necessity(const Lattice& input, const DivClass& b_in,
                                       const Assumptions& assumptions_in)
{
    if (input.rank() != 2)
        throw Error(Errc::UnsupportedRank, "the necessity replay needs Pic = Zh + ZB (rank 2)");
    if (b_in.size() != 2)
        throw Error(Errc::DimensionMismatch, "class length does not match lattice rank");
    check_assumptions(input, assumptions_in);

    TheoremReport rep;
    rep.classification = is_initialized_acm(input, b_in, assumptions_in);
    if (!rep.classification.initialized_acm())
        throw Error(Errc::NotAcmInput, format_class(input, b_in) + " is classified " +
                                           std::string(to_string(rep.classification.status)));
    rep.b2 = self_int(input, b_in);
    rep.hb = degree(input, b_in);

    const DivClass& h = input.ample();
    rep.reduction.new_b = b_in;
    if (rep.b2 == 0 && rep.hb == 3) {
        rep.reduction.rule = "h-B";
        rep.reduction.new_b = h - b_in;
    } else if (rep.b2 == 2 && rep.hb == 5) {
        rep.reduction.rule = "2h-B";
        rep.reduction.new_b = 2 * h - b_in;
    }
    const BasisChange bc = change_basis(input, {h, rep.reduction.new_b}, {"h", "B"});
    const Lattice& L = bc.lattice;
    const Assumptions assumptions = transform(bc, assumptions_in);
    const DivClass b = DivClass::basis(2, 1);
    rep.reduction.b2 = self_int(L, b);
    rep.reduction.hb = degree(L, b);

    rep.preset = preset_tag_for(rep.reduction.b2, rep.reduction.hb);
    if (rep.preset.empty()) {
        rep.unmatched.push_back("no case list for (B^2, h.B) = (" +
                                std::to_string(rep.reduction.b2) + "," +
                                std::to_string(rep.reduction.hb) + ")");
        return rep;
    }
    const CaseSpec spec = lemma51_preset(rep.preset, L);
    rep.survivors = enumerate_case(spec);

    const AcmClassification bclass = is_initialized_acm(L, b, assumptions);
    std::vector<std::pair<DivClass, std::string>> closure{{DivClass::zero(2), "O_X"}, {b, "B"}};
    for (auto& c : acm_companions(L, b, bclass, assumptions))
        closure.emplace_back(c.cls, c.rule);

    for (const auto& p : enumerate_case(without_abs_t(spec))) {
        if (std::llabs(p.second) > 1)
            continue;
        SmallTPoint sp;
        sp.st = p;
        const DivClass c = case_class(spec, p.first, p.second);
        for (const auto& [x, rule] : closure) {
            const DivClass diff = c - x;
            if (diff.coords[1] == 0) {
                sp.resolved = true;
                sp.via = rule;
                sp.twist = diff.coords[0];
                sp.x = format_class(L, x);
                break;
            }
        }
        if (!sp.resolved)
            rep.unmatched.push_back("t=" + std::to_string(p.second) + " point " + point_text(p) +
                                    " is not a twist of an aCM companion");
        rep.small_t.push_back(std::move(sp));
    }

    for (const auto& p : rep.survivors) {
        SurvivorCheck chk;
        chk.st = p;
        auto script = find_case_script(rep.reduction.b2, rep.reduction.hb, p.first, p.second);
        if (script) {
            chk.script = script->tag;
            std::set<std::string> seen;
            run_with_depends(*script, L, assumptions, seen, chk.reports);
            chk.success = true;
            for (const auto& r : chk.reports)
                chk.success = chk.success && r.success;
        }
        if (!chk.success)
            rep.unmatched.push_back("survivor " + point_text(p) +
                                    (chk.script.empty() ? " has no script"
                                                        : " not refuted by " + chk.script));
        rep.checks.push_back(std::move(chk));
    }
    rep.verified = rep.unmatched.empty();
    return rep;
}

TheoremReport verify_theorem_necessity(const Lattice& L, const Assumptions& assumptions)
{
    if (L.rank() != 2)
        throw Error(Errc::UnsupportedRank, "the necessity replay needs Pic = Zh + ZB (rank 2)");
    return verify_theorem_necessity(L, DivClass::basis(2, 1), assumptions);
}

}  // namespace k3acm
