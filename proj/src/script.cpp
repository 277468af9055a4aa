#include "k3acm/script.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "k3acm/axioms.hpp"
#include "k3acm/checked.hpp"
#include "k3acm/destabilize.hpp"
#include "k3acm/error.hpp"
#include "k3acm/invariants.hpp"

namespace k3acm {

namespace {

using PL = PiecewiseLinear;

// Argument kinds: N numeric, C class text, M pair-mode text.
struct OpSig {
    std::string name;
    std::string args;  // one letter per argument; "N+" means two or more numerics
};

const std::vector<OpSig>& signatures()
{
    static const std::vector<OpSig> sigs = {
        {"add", "N+"},       {"sub", "NN"},          {"mul", "NN"},
        {"neg", "N"},        {"max", "NN"},          {"min", "NN"},
        {"div", "NN"},       {"pair", "CC"},         {"sq", "C"},
        {"deg", "C"},        {"same", "CC"},         {"effective", "C"},
        {"acm", "C"},        {"genus", "N"},         {"chi_line", "N"},
        {"bn", "NNN"},       {"lm_h0", "NNN"},       {"twist_chi", "NNNN"},
        {"hodge_lower", "NN"}, {"h0_p1", "N"},       {"chi_bundle", "NCN"},
        {"twist_c2", "NCC"}, {"twist_c1sq", "CC"},   {"destab_unresolved", "CNM"},
        {"is_even", ""},     {"sig_pos", ""},        {"sig_neg", ""},
    };
    return sigs;
}

const OpSig* find_sig(const std::string& name)
{
    for (const auto& s : signatures())
        if (s.name == name)
            return &s;
    return nullptr;
}

[[noreturn]] void malformed(const std::string& tag, const std::string& what)
{
    throw Error(Errc::MalformedScript, "script '" + tag + "': " + what);
}

void check_expr(const DerivationScript& sc, const Expr& e, const std::set<std::string>& bound,
                char want)
{
    switch (e.kind) {
    case Expr::Kind::Literal:
        if (want != 'N')
            malformed(sc.tag, "literal where a class or mode is expected");
        return;
    case Expr::Kind::Var:
        if (want != 'N')
            malformed(sc.tag, "variable '" + e.name + "' where a class or mode is expected");
        if (!bound.count(e.name))
            malformed(sc.tag, "variable '" + e.name + "' used before it is bound");
        return;
    case Expr::Kind::Class:
        if (want == 'M') {
            try {
                pair_mode_from_string(e.name);
            } catch (const Error&) {
                malformed(sc.tag, "unknown pair mode '" + e.name + "'");
            }
            return;
        }
        if (want != 'C')
            malformed(sc.tag, "class '" + e.name + "' where a number is expected");
        try {
            parse_class(sc.lattice, e.name, sc.classes);
        } catch (const Error& err) {
            malformed(sc.tag, "class '" + e.name + "': " + err.what());
        }
        return;
    case Expr::Kind::Op: {
        if (want != 'N')
            malformed(sc.tag, "operator '" + e.name + "' where a class or mode is expected");
        const OpSig* sig = find_sig(e.name);
        if (!sig)
            malformed(sc.tag, "unknown operator '" + e.name + "'");
        if (sig->args == "N+") {
            if (e.args.size() < 2)
                malformed(sc.tag, "operator 'add' needs at least two arguments");
            for (const auto& a : e.args)
                check_expr(sc, a, bound, 'N');
            return;
        }
        if (e.args.size() != sig->args.size())
            malformed(sc.tag, "operator '" + e.name + "' takes " +
                                  std::to_string(sig->args.size()) + " arguments, got " +
                                  std::to_string(e.args.size()));
        for (std::size_t i = 0; i < e.args.size(); ++i)
            check_expr(sc, e.args[i], bound, sig->args[i]);
        return;
    }
    }
}

struct Evaluator {
    const DerivationScript& sc;
    std::map<std::string, i64>& env;
    std::optional<std::string> free_var;

    DivClass cls(const Expr& e) const { return parse_class(sc.lattice, e.name, sc.classes); }

    i64 num(const Expr& e) const { return eval(e).constant_value(); }

    PL eval(const Expr& e) const
    {
        const Lattice& L = sc.lattice;
        switch (e.kind) {
        case Expr::Kind::Literal:
            return PL::constant(e.value);
        case Expr::Kind::Var: {
            if (free_var && *free_var == e.name)
                return PL::identity();
            auto it = env.find(e.name);
            if (it == env.end())
                throw Error(Errc::PreconditionViolated,
                            "'" + e.name + "' depends on a failed step");
            return PL::constant(it->second);
        }
        case Expr::Kind::Class:
            throw Error(Errc::PreconditionViolated, "class used as a number");
        case Expr::Kind::Op:
            break;
        }
        const std::string& op = e.name;
        const auto& a = e.args;
        if (op == "add") {
            PL r = eval(a[0]);
            for (std::size_t i = 1; i < a.size(); ++i)
                r = r + eval(a[i]);
            return r;
        }
        if (op == "sub")
            return eval(a[0]) - eval(a[1]);
        if (op == "neg")
            return -eval(a[0]);
        if (op == "mul") {
            PL x = eval(a[0]), y = eval(a[1]);
            if (x.is_constant())
                return x.constant_value() * y;
            if (y.is_constant())
                return y.constant_value() * x;
            throw Error(Errc::PreconditionViolated, "product of two non-constant terms");
        }
        if (op == "max")
            return PL::max(eval(a[0]), eval(a[1]));
        if (op == "min")
            return PL::min(eval(a[0]), eval(a[1]));
        if (op == "h0_p1")
            return PL::max(eval(a[0]) + PL::constant(1), PL::constant(0));
        if (op == "lm_h0" || op == "bn" || op == "twist_chi") {
            std::vector<PL> xs;
            bool constant = true;
            for (const auto& x : a) {
                xs.push_back(eval(x));
                constant = constant && xs.back().is_constant();
            }
            if (!constant)
                return affine_form(op, xs);
        }
        return PL::constant(scalar(op, a, L));
    }

    // Exact forms of the Riemann-Roch counts when one argument is the solve
    // unknown; the remaining parameter (r, or l) must be constant.
    static PL affine_form(const std::string& op, const std::vector<PL>& x)
    {
        if (op == "lm_h0") {
            const i64 r = x[1].constant_value();
            return x[0] - x[2] + PL::constant(checked::add(1, checked::mul(2, r)));
        }
        if (op == "bn") {
            const i64 r = x[1].constant_value();
            return x[0] - checked::add(r, 1) * (x[0] - x[2] + PL::constant(r));
        }
        const i64 l = x[0].constant_value();
        return PL::constant(checked::add(checked::mul(4, checked::mul(l, l)), 3)) - l * x[1] +
               x[2] - x[3];
    }

    i64 scalar(const std::string& op, const std::vector<Expr>& a, const Lattice& L) const
    {
        if (op == "div") {
            const i64 x = num(a[0]), y = num(a[1]);
            if (y == 0 || x % y != 0)
                throw Error(Errc::PreconditionViolated,
                            std::to_string(x) + " / " + std::to_string(y) + " is not exact");
            return x / y;
        }
        if (op == "pair")
            return pair(L, cls(a[0]), cls(a[1]));
        if (op == "sq")
            return self_int(L, cls(a[0]));
        if (op == "deg")
            return degree(L, cls(a[0]));
        if (op == "same")
            return cls(a[0]) == cls(a[1]) ? 1 : 0;
        if (op == "effective") {
            switch (effectivity(L, cls(a[0]), sc.assumptions).value) {
            case Effectivity::Effective: return 1;
            case Effectivity::Empty: return -1;
            case Effectivity::Unknown: return 0;
            }
        }
        if (op == "acm")
            return is_initialized_acm(L, cls(a[0]), sc.assumptions).initialized_acm() ? 1 : 0;
        if (op == "genus")
            return genus_of(num(a[0]));
        if (op == "chi_line")
            return chi_line(num(a[0]));
        if (op == "bn")
            return brill_noether(num(a[0]), num(a[1]), num(a[2]));
        if (op == "lm_h0")
            return lm_invariants(num(a[0]), num(a[1]), num(a[2])).h0;
        if (op == "twist_chi")
            return twist_chi(num(a[0]), num(a[1]), num(a[2]), num(a[3]));
        if (op == "hodge_lower")
            return hodge_lower(num(a[0]), num(a[1]));
        if (op == "chi_bundle")
            return chi_bundle({num(a[0]), cls(a[1]), num(a[2])}, L);
        if (op == "twist_c2")
            return chern_twist({2, cls(a[1]), num(a[0])}, cls(a[2]), L).c2;
        if (op == "twist_c1sq")
            return self_int(L, chern_twist({2, cls(a[0]), 0}, cls(a[1]), L).c1);
        if (op == "destab_unresolved") {
            const auto recs = enumerate_destabilizing(L, cls(a[0]), num(a[1]), sc.assumptions,
                                                      pair_mode_from_string(a[2].name));
            i64 k = unresolved_count(recs);
            for (const auto& r : recs)
                if (r.unresolved() && r.candidates.empty())
                    ++k;
            return k;
        }
        if (op == "is_even")
            return is_even(L) ? 1 : 0;
        if (op == "sig_pos")
            return signature(L).positive;
        if (op == "sig_neg")
            return signature(L).negative;
        throw Error(Errc::MalformedScript, "unknown operator '" + op + "'");
    }
};

Rel negate(Rel rel)
{
    switch (rel) {
    case Rel::Lt: return Rel::Ge;
    case Rel::Le: return Rel::Gt;
    case Rel::Eq: return Rel::Ne;
    case Rel::Ne: return Rel::Eq;
    case Rel::Ge: return Rel::Lt;
    case Rel::Gt: return Rel::Le;
    }
    return rel;
}

std::string claim_text(const Expr& lhs, Rel rel, const Expr& rhs)
{
    return render(lhs) + " " + to_string(rel) + " " + render(rhs);
}

std::string join(const std::vector<i64>& xs)
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << (i ? "," : "") << xs[i];
    out << '}';
    return out.str();
}

}  // namespace

Expr Expr::lit(i64 v)
{
    Expr e;
    e.kind = Kind::Literal;
    e.value = v;
    return e;
}

Expr Expr::var(std::string n)
{
    Expr e;
    e.kind = Kind::Var;
    e.name = std::move(n);
    return e;
}

Expr Expr::cls(std::string text)
{
    Expr e;
    e.kind = Kind::Class;
    e.name = std::move(text);
    return e;
}

Expr Expr::op(std::string n, std::vector<Expr> a)
{
    Expr e;
    e.kind = Kind::Op;
    e.name = std::move(n);
    e.args = std::move(a);
    return e;
}

Expr operator+(Expr a, Expr b) { return Expr::op("add", {std::move(a), std::move(b)}); }
Expr operator-(Expr a, Expr b) { return Expr::op("sub", {std::move(a), std::move(b)}); }
Expr operator*(Expr a, Expr b) { return Expr::op("mul", {std::move(a), std::move(b)}); }
Expr operator-(Expr a) { return Expr::op("neg", {std::move(a)}); }

std::string render(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::Literal:
        return std::to_string(e.value);
    case Expr::Kind::Var:
    case Expr::Kind::Class:
        return e.name;
    case Expr::Kind::Op:
        break;
    }
    auto r = [](const Expr& x) { return render(x); };
    const auto& a = e.args;
    if (e.name == "add") {
        std::string s = "(" + r(a[0]);
        for (std::size_t i = 1; i < a.size(); ++i)
            s += " + " + r(a[i]);
        return s + ")";
    }
    if (e.name == "sub" && a.size() == 2)
        return "(" + r(a[0]) + " - " + r(a[1]) + ")";
    if (e.name == "mul" && a.size() == 2)
        return r(a[0]) + "*" + r(a[1]);
    if (e.name == "neg" && a.size() == 1)
        return "-" + r(a[0]);
    if (e.name == "pair" && a.size() == 2)
        return "(" + r(a[0]) + ").(" + r(a[1]) + ")";
    if (e.name == "sq" && a.size() == 1)
        return "(" + r(a[0]) + ")^2";
    std::string s = e.name + "(";
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (i ? ", " : "") + r(a[i]);
    return s + ")";
}

const std::vector<std::string>& expr_operators()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : signatures())
            v.push_back(s.name);
        return v;
    }();
    return names;
}

std::string_view to_string(StepStatus status)
{
    switch (status) {
    case StepStatus::Verified: return "Verified";
    case StepStatus::AxiomUsed: return "AxiomUsed";
    case StepStatus::Failed: return "FAILED";
    }
    return "?";
}

void validate_script(const DerivationScript& sc)
{
    for (const auto& [name, c] : sc.classes)
        if (c.size() != sc.lattice.rank())
            malformed(sc.tag, "class '" + name + "' has the wrong number of coordinates");
    for (const auto& a : sc.assumptions)
        if (a.subject.size() != sc.lattice.rank())
            malformed(sc.tag, "assumption subject has the wrong number of coordinates");

    std::set<std::string> bound;
    for (const auto& step : sc.steps) {
        if (const auto* c = std::get_if<ArithmeticClaim>(&step)) {
            std::set<std::string> inner = bound;
            if (c->forall) {
                if (bound.count(*c->forall))
                    malformed(sc.tag, "forall variable '" + *c->forall + "' is already bound");
                if (c->bind)
                    malformed(sc.tag, "a forall claim cannot bind a value");
                inner.insert(*c->forall);
            }
            check_expr(sc, c->lhs, inner, 'N');
            check_expr(sc, c->rhs, inner, 'N');
            if (c->contradicts && !is_known_axiom(*c->contradicts))
                malformed(sc.tag, "unknown axiom id '" + *c->contradicts + "'");
            if (c->bind) {
                if (bound.count(*c->bind))
                    malformed(sc.tag, "variable '" + *c->bind + "' bound twice");
                bound.insert(*c->bind);
            }
        } else if (const auto* s = std::get_if<SolveClaim>(&step)) {
            if (bound.count(s->var))
                malformed(sc.tag, "solve variable '" + s->var + "' is already bound");
            if (s->where.empty())
                malformed(sc.tag, "solve for '" + s->var + "' has no conditions");
            std::set<std::string> inner = bound;
            inner.insert(s->var);
            for (const auto& w : s->where) {
                check_expr(sc, w.lhs, inner, 'N');
                check_expr(sc, w.rhs, inner, 'N');
            }
            if (s->expect.size() == 1)
                bound.insert(s->var);
        } else {
            const auto& ax = std::get<AxiomUse>(step);
            if (!is_known_axiom(ax.id))
                malformed(sc.tag, "unknown axiom id '" + ax.id + "'");
        }
    }
    if (sc.conclusion.kind == ConclusionKind::Contradiction) {
        if (sc.steps.empty())
            malformed(sc.tag, "a contradiction needs at least one step");
        const auto* last = std::get_if<ArithmeticClaim>(&sc.steps.back());
        if (!last || !last->contradicts)
            malformed(sc.tag, "the final step must be an arithmetic claim naming the refuted axiom");
    } else if (sc.conclusion.statement.empty()) {
        malformed(sc.tag, "an established conclusion needs a statement id");
    }
}

DerivationReport run_script(const DerivationScript& sc)
{
    validate_script(sc);
    DerivationReport rep;
    rep.tag = sc.tag;
    bool all_ok = true;
    for (std::size_t i = 0; i < sc.steps.size(); ++i) {
        StepResult res;
        res.index = i + 1;
        const Step& step = sc.steps[i];
        if (const auto* ax = std::get_if<AxiomUse>(&step)) {
            res.kind = "axiom";
            res.status = StepStatus::AxiomUsed;
            res.text = ax->id;
            res.cite = ax->cite;
            res.detail = axiom(ax->id).statement;
            rep.steps.push_back(std::move(res));
            continue;
        }
        try {
            if (const auto* c = std::get_if<ArithmeticClaim>(&step)) {
                res.kind = "arith";
                res.text = claim_text(c->lhs, c->rel, c->rhs);
                if (c->forall)
                    res.text = "for all " + *c->forall + " in Z: " + res.text;
                res.cite = c->cite;
                Evaluator ev{sc, rep.bindings, c->forall};
                const PL diff = ev.eval(c->lhs) - ev.eval(c->rhs);
                if (c->forall) {
                    const bool ok = diff.holds_everywhere(c->rel);
                    res.status = ok ? StepStatus::Verified : StepStatus::Failed;
                    if (ok) {
                        res.detail = "holds at every integer (" +
                                     std::to_string(diff.pieces().size()) + " affine pieces)";
                    } else {
                        const auto bad = diff.solve(negate(c->rel));
                        res.detail = "fails on part of Z";
                        if (!bad.empty()) {
                            const Interval& iv = bad.front();
                            const i64 x = iv.lo ? *iv.lo : iv.hi ? *iv.hi : 0;
                            res.detail += ", e.g. " + *c->forall + " = " + std::to_string(x);
                        }
                    }
                } else {
                    const i64 l = ev.num(c->lhs), r = ev.num(c->rhs);
                    const bool ok = holds(l, c->rel, r);
                    res.status = ok ? StepStatus::Verified : StepStatus::Failed;
                    res.detail = std::to_string(l) + " " + to_string(c->rel) + " " +
                                 std::to_string(r);
                    if (ok && c->bind)
                        rep.bindings[*c->bind] = l;
                }
            } else {
                const auto& s = std::get<SolveClaim>(step);
                res.kind = "solve";
                res.cite = s.cite;
                std::string conds;
                for (const auto& w : s.where)
                    conds += (conds.empty() ? "" : ", ") + claim_text(w.lhs, w.rel, w.rhs);
                res.text = s.var + " in " + join(s.expect) + " <=> " + conds;
                Evaluator ev{sc, rep.bindings, s.var};
                std::vector<Interval> sol = {Interval{}};
                for (const auto& w : s.where)
                    sol = intersect(sol, (ev.eval(w.lhs) - ev.eval(w.rhs)).solve(w.rel));
                std::vector<i64> found;
                bool bounded = true;
                for (const auto& iv : sol) {
                    if (!iv.finite() || checked::sub(*iv.hi, *iv.lo) > 100000) {
                        bounded = false;
                        break;
                    }
                    for (i64 x = *iv.lo; x <= *iv.hi; ++x)
                        found.push_back(x);
                }
                std::vector<i64> want = s.expect;
                std::sort(want.begin(), want.end());
                const bool ok = bounded && found == want;
                res.status = ok ? StepStatus::Verified : StepStatus::Failed;
                res.detail = bounded ? "solutions " + join(found) : "solution set is unbounded";
                if (ok && want.size() == 1)
                    rep.bindings[s.var] = want.front();
            }
        } catch (const Error& err) {
            res.status = StepStatus::Failed;
            res.detail = err.what();
        }
        if (res.status == StepStatus::Failed)
            all_ok = false;
        rep.steps.push_back(std::move(res));
    }
    rep.success = all_ok;
    if (!all_ok) {
        std::size_t first = 0;
        for (const auto& s : rep.steps)
            if (s.status == StepStatus::Failed) {
                first = s.index;
                break;
            }
        rep.final_line = "FAILED: step " + std::to_string(first);
    } else if (sc.conclusion.kind == ConclusionKind::Contradiction) {
        rep.final_line = "CONTRADICTION ESTABLISHED";
    } else {
        rep.final_line = "ESTABLISHED: " + sc.conclusion.statement;
    }
    return rep;
}

DerivationScript rebase(DerivationScript script, const Lattice& L, Assumptions assumptions)
{
    script.lattice = L;
    script.assumptions = std::move(assumptions);
    return script;
}

}  // namespace k3acm
