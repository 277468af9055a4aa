#include "k3acm/builtin.hpp"

#include "k3acm/casework.hpp"

namespace k3acm {

namespace {

using E = Expr;

E n(i64 v) { return E::lit(v); }
E v(const std::string& name) { return E::var(name); }
E sq(const std::string& c) { return E::op("sq", {E::cls(c)}); }
E pr(const std::string& a, const std::string& b) { return E::op("pair", {E::cls(a), E::cls(b)}); }
E fn(const std::string& op, std::vector<E> args) { return E::op(op, std::move(args)); }
E same(const std::string& a, const std::string& b) { return fn("same", {E::cls(a), E::cls(b)}); }

class Builder {
public:
    Builder(std::string tag, std::string title, Lattice L) : s_{std::move(tag), std::move(title),
                                                                 std::move(L), {}, {}, {}, {}, {}, {}}
    {
    }

    Builder& cls(const std::string& name, const std::string& text)
    {
        s_.classes[name] = parse_class(s_.lattice, text, s_.classes);
        return *this;
    }
    Builder& assume(const std::string& text, AssumptionKind kind, std::string note)
    {
        s_.assumptions.push_back({parse_class(s_.lattice, text, s_.classes), kind, std::move(note)});
        return *this;
    }
    Builder& claim(E lhs, Rel rel, E rhs, std::string cite)
    {
        s_.steps.push_back(ArithmeticClaim{std::move(lhs), rel, std::move(rhs), std::move(cite),
                                           {}, {}, {}});
        return *this;
    }
    Builder& eq(E lhs, i64 value, std::string cite)
    {
        return claim(std::move(lhs), Rel::Eq, n(value), std::move(cite));
    }
    // Verifies lhs = value and binds it.
    Builder& let(const std::string& name, E lhs, i64 value, std::string cite)
    {
        s_.steps.push_back(ArithmeticClaim{std::move(lhs), Rel::Eq, n(value), std::move(cite), name,
                                           {}, {}});
        return *this;
    }
    // A case hypothesis: introduces name = value.
    Builder& suppose(const std::string& name, i64 value, std::string cite)
    {
        return let(name, n(value), value, std::move(cite));
    }
    Builder& forall(const std::string& var, E lhs, Rel rel, E rhs, std::string cite,
                    std::optional<std::string> contradicts = {})
    {
        s_.steps.push_back(ArithmeticClaim{std::move(lhs), rel, std::move(rhs), std::move(cite), {},
                                           var, std::move(contradicts)});
        return *this;
    }
    Builder& solve(const std::string& var, std::vector<Condition> where, std::vector<i64> expect,
                   std::string cite)
    {
        s_.steps.push_back(SolveClaim{var, std::move(where), std::move(expect), std::move(cite)});
        return *this;
    }
    Builder& axiom(const std::string& id, std::string cite)
    {
        s_.steps.push_back(AxiomUse{id, std::move(cite)});
        return *this;
    }
    Builder& refute(E lhs, Rel rel, E rhs, std::string cite, std::string axiom_id)
    {
        s_.steps.push_back(ArithmeticClaim{std::move(lhs), rel, std::move(rhs), std::move(cite), {},
                                           {}, std::move(axiom_id)});
        return *this;
    }
    Builder& target(i64 b2, i64 hb, i64 s, i64 t)
    {
        s_.target = ScriptTarget{b2, hb, s, t};
        return *this;
    }
    Builder& depends(std::string tag)
    {
        s_.depends.push_back(std::move(tag));
        return *this;
    }
    DerivationScript contradiction()
    {
        s_.conclusion = {ConclusionKind::Contradiction, {}};
        return s_;
    }
    DerivationScript established(std::string statement)
    {
        s_.conclusion = {ConclusionKind::Established, std::move(statement)};
        return s_;
    }

private:
    DerivationScript s_;
};

Condition cond(E lhs, Rel rel, E rhs) { return {std::move(lhs), rel, std::move(rhs)}; }

// Shared opening: the lattice entries the argument reads.
void lattice_facts(Builder& b, i64 b2, i64 hb)
{
    b.eq(sq("h"), 4, "h^2 = 4 on a quartic");
    b.eq(sq("B"), b2, "B^2 = " + std::to_string(b2));
    b.eq(pr("h", "B"), hb, "h.B = " + std::to_string(hb));
}

// When the B-role class Bp differs from B, check it has B's invariants.
void role_facts(Builder& b, i64 b2, i64 hb, const std::string& bp_text, const std::string& c_form)
{
    b.eq(sq("Bp"), b2, "(" + bp_text + ")^2 = " + std::to_string(b2));
    b.eq(pr("h", "Bp"), hb, "h.(" + bp_text + ") = " + std::to_string(hb));
    b.eq(same("C", c_form), 1, "C = " + c_form + " with Bp = " + bp_text + " in the role of B");
}

// Forced degree from h^0(E) <= 8 and chi(E(-1)) >= 0.
void force_degree(Builder& b, i64 d)
{
    b.axiom("AX-LM-INVARIANTS", "c1(E) = C, c2(E) = d, h^0(E) = g - d + 3 for a pencil");
    b.axiom("AX-ULRICH-BOUND", "h^0(E) <= 4 rk(E) = 8");
    b.axiom("AX-ACM-VANISH", "h^0(E(-1)) = h^1(E(-1)) = 0, so chi(E(-1)) = h^2(E(-1)) >= 0");
    b.solve("d",
            {cond(fn("lm_h0", {v("g"), n(1), v("d")}), Rel::Le, n(8)),
             cond(fn("twist_chi", {n(1), v("CH"), v("g"), v("d")}), Rel::Ge, n(0))},
            {d}, "h^0(E) = g - d + 3 <= 8 and chi(E(-1)) >= 0 force d = " + std::to_string(d));
}

DerivationScript case_a()
{
    Builder b("case-B2neg2-Bh1", "B^2 = -2, h.B = 1, C in |3h-2B|", quartic_lattice(-2, 1));
    b.cls("C", "3h-2B").cls("F", "h-B").cls("Gamma", "B").target(-2, 1, 3, -2);
    lattice_facts(b, -2, 1);
    b.let("g", fn("genus", {sq("C")}), 9, "C^2 = 16, g = 9");
    b.eq(sq("F"), 0, "F = h-B has F^2 = 0");
    b.eq(pr("h", "F"), 3, "h.F = 3");
    b.axiom("AX-VA-DEGREE3", "|F| is an elliptic pencil: F^2 = 0, h.F = 3, h very ample");
    b.axiom("AX-INITIALIZED-CRIT", "h^0(E(-h-F)) = 0 since F is effective and h^0(E(-1)) = 0");
    b.axiom("AX-RATIONAL-CURVE", "B^2 = -2 and h.B = 1: a member Gamma of |B| is a (-2)-curve");
    b.eq(same("-h-F-Gamma", "-2h"), 1,
         "0 -> E(-2) -> E(-h-F) -> E(-h-F)|_Gamma -> 0: (-h-F) - Gamma = -2h");
    b.axiom("AX-ACM-VANISH", "h^0(E(-2)) = h^1(E(-2)) = 0, hence h^0(E(-h-F)|_Gamma) = 0");
    b.let("deg", pr("C-2h-2F", "Gamma"), -1, "deg E(-h-F)|_Gamma = (C-2h-2F).Gamma = -H.Gamma = -1");
    b.axiom("AX-SPLITTING-P1", "E(-h-F)|_Gamma = O(deg+a) + O(-a) for some integer a");
    b.forall("a", fn("max", {v("deg") + v("a"), -v("a")}), Rel::Ge, n(0),
             "min over a of max(a-1, -a) >= 0: one summand has non-negative degree");
    b.forall("a", fn("h0_p1", {v("deg") + v("a")}) + fn("h0_p1", {-v("a")}), Rel::Ge, n(1),
             "h^0(O(-1+a)) + h^0(O(-a)) > 0 for every a, against h^0(E(-h-F)|_Gamma) = 0",
             "AX-ACM-VANISH");
    return b.contradiction();
}

// C = 2h + 2Bp, Bp = B or h - B.
DerivationScript case_b(bool mirror)
{
    const std::string bp = mirror ? "h-B" : "B";
    Builder b(mirror ? "case-B2neg2-Bh2-mirror" : "case-B2neg2-Bh2",
              mirror ? "B^2 = -2, h.B = 2, C in |4h-2B|" : "B^2 = -2, h.B = 2, C in |2h+2B|",
              quartic_lattice(-2, 2));
    b.cls("Bp", bp).cls("C", mirror ? "4h-2B" : "2h+2B");
    mirror ? b.target(-2, 2, 4, -2) : b.target(-2, 2, 2, 2);
    lattice_facts(b, -2, 2);
    if (mirror)
        role_facts(b, -2, 2, bp, "2h+2Bp");
    b.let("g", fn("genus", {sq("C")}), 13, "C^2 = 24, g = 13");
    b.let("CH", pr("C", "h"), 12, "C.H = 12");
    force_degree(b, 8);
    b.eq(fn("lm_h0", {v("g"), n(1), v("d")}), 8, "h^0(E) = 16 - d = 8");
    b.eq(fn("twist_chi", {n(1), v("CH"), v("g"), v("d")}), 0, "chi(E(-1)) = 8 - d = 0");
    b.eq(same("C-h", "2Bp+h"), 1, "O(C-H) = 2B+h");
    b.axiom("AX-INITIALIZED-CRIT", "h^0(O(C-H) (x) J_Z) = 0");
    b.eq(fn("effective", {E::cls("Bp")}), 1,
         "B is effective, so h^0((B+h) (x) J_Z) <= h^0((2B+h) (x) J_Z) = 0");
    b.axiom("AX-SERRE-EXTENSION", "0 -> O(-h-B) -> E(-h-B) -> O(h+B) (x) J_Z -> 0");
    b.eq(sq("h+Bp"), 6, "(h+B)^2 = 6");
    b.eq(pr("h", "h+Bp"), 6, "h.(h+B) = 6 > 0");
    b.axiom("AX-1CONNECTED-H1", "h+B is 1-connected: h^0(-h-B) = h^1(-h-B) = 0");
    b.eq(same("C-2h-2Bp", "0"), 1, "det E(-h-B) = O_X");
    b.axiom("AX-SERRE", "h^2(E(-h-B)) = h^0(E(-h-B)^v) = h^0(E(-h-B)) = 0 since det is trivial");
    b.let("c1sq", fn("twist_c1sq", {E::cls("C"), E::cls("-h-Bp")}), 0, "c1(E(-h-B))^2 = 0");
    b.let("c2t", fn("twist_c2", {v("d"), E::cls("C"), E::cls("-h-Bp")}), 2,
          "c2(E(-h-B)) = d + C.(-h-B) + (h+B)^2 = 2");
    b.let("chi", fn("chi_bundle", {n(2), E::cls("C-2h-2Bp"), v("c2t")}), 2,
          "chi(E(-h-B)) = 4 + 0 - 2 = 2");
    b.refute(-v("chi"), Rel::Lt, n(0), "h^1(E(-h-B)) = -chi(E(-h-B)) = -2 < 0", "AX-H1NONNEG");
    return b.contradiction();
}

DerivationScript case_c()
{
    Builder b("case-B2neg2-Bh3", "B^2 = -2, h.B = 3, C in |4h-2B|", quartic_lattice(-2, 3));
    b.cls("C", "4h-2B").cls("P", "2h-B").target(-2, 3, 4, -2);
    lattice_facts(b, -2, 3);
    b.let("g", fn("genus", {sq("C")}), 5, "C^2 = 8, g = 5");
    b.let("CH", pr("C", "h"), 10, "C.H = 10");
    b.axiom("AX-ACM-VANISH", "h^1(E(-1)) = 0, so chi(E(-1)) = 2 - d >= 0");
    b.axiom("AX-PENCIL-DEGREE2", "a base point free pencil on a curve of genus 5 has d >= 2");
    b.solve("d",
            {cond(fn("twist_chi", {n(1), v("CH"), v("g"), v("d")}), Rel::Ge, n(0)),
             cond(v("d"), Rel::Ge, n(2))},
            {2}, "chi(E(-1)) = 2 - d >= 0 and d >= 2 give d = 2");
    b.let("rho", fn("bn", {v("g"), n(1), v("d")}), -3, "rho(5,1,2) = -3");
    b.claim(v("rho"), Rel::Lt, n(0), "rho < 0");
    b.axiom("AX-GONAL-PAIR", "0 -> M -> E -> N -> 0, h^1(M) = h^1(N) = 0, M^2 >= N^2, N bpf");
    b.eq(sq("P"), 2, "(2h-B)^2 = 2");
    b.eq(pr("h", "P"), 5, "h.(2h-B) = 5");
    b.axiom("AX-BPF-ACM", "|2h-B| is base point free");
    b.eq(same("C", "2P"), 1, "C = 2(2h-B)");
    // N^2 = 0: (2h-B).N >= 2.
    b.axiom("AX-2CONNECTED", "N^2 = 0: (2h-B).N >= 2");
    b.claim(n(2) * n(2), Rel::Gt, v("d"), "M.N = C.N = 2(2h-B).N >= 4 > 2 = d");
    // N^2 = 2: (2h-B).N = 2 and (2h-B-N)^2 = 0.
    b.suppose("PN", 2, "N^2 = 2: 2 = M.N = C.N - 2 gives (2h-B).N = 2");
    b.eq(sq("P") - n(2) * v("PN") + n(2), 0, "(2h-B-N)^2 = 0 and N.(2h-B-N) = 0, so N = 2h-B");
    b.axiom("AX-INDECOMPOSABLE", "N = 2h-B makes E = (2h-B) + (2h-B)");
    // N^2 >= 4: M.N >= N^2 >= 4 > 2.
    b.axiom("AX-HODGE-INDEX", "M^2 >= N^2 gives M.N >= N^2");
    b.claim(n(4), Rel::Gt, v("d"), "N^2 >= 4: M.N >= 4 > 2 = d");
    b.refute(fn("destab_unresolved", {E::cls("C"), v("d"), E::cls("gonal")}), Rel::Eq, n(0),
             "every destabilizing pair (M, N) is excluded", "AX-GONAL-PAIR");
    return b.contradiction();
}

// C = h + 2Bp, Bp = B or 2h - B.
DerivationScript case_d(bool mirror)
{
    const std::string bp = mirror ? "2h-B" : "B";
    Builder b(mirror ? "case-B2zero-Bh4-mirror" : "case-B2zero-Bh4",
              mirror ? "B^2 = 0, h.B = 4, C in |5h-2B|" : "B^2 = 0, h.B = 4, C in |h+2B|",
              quartic_lattice(0, 4));
    b.cls("Bp", bp).cls("C", mirror ? "5h-2B" : "h+2B");
    mirror ? b.target(0, 4, 5, -2) : b.target(0, 4, 1, 2);
    lattice_facts(b, 0, 4);
    if (mirror)
        role_facts(b, 0, 4, bp, "h+2Bp");
    b.let("g", fn("genus", {sq("C")}), 11, "C^2 = 20, g = 11");
    b.let("CH", pr("C", "h"), 12, "C.H = 12");
    force_degree(b, 6);
    b.eq(fn("lm_h0", {v("g"), n(1), v("d")}), 8, "h^0(E) = 14 - d = 8");
    b.eq(fn("twist_chi", {n(1), v("CH"), v("g"), v("d")}), 0, "chi(E(-1)) = 6 - d = 0");
    b.let("rho", fn("bn", {v("g"), n(1), v("d")}), -1, "rho(11,1,6) = -1");
    b.claim(v("rho"), Rel::Lt, n(0), "rho < 0");
    b.axiom("AX-NONSIMPLE-PAIR",
            "0 -> M -> E -> N (x) J_Z' -> 0, h^0(M), h^0(N) >= 2, M^2 >= N^2, N bpf");
    // N^2 = 0: N = rF.
    b.axiom("AX-VA-DEGREE3", "N^2 = 0: |N| = |rF| with F elliptic and h.F >= 3");
    b.eq(pr("C", "Bp"), 4, "C.B = 4");
    b.solve("r", {cond(n(3) * v("r"), Rel::Le, v("d")), cond(v("r"), Rel::Ge, n(1))}, {1, 2},
            "3r <= r(h+2B).F = C.N = M.N <= 6");
    b.axiom("AX-ELLIPTIC-H1", "r = 2 forces len Z' = 0 and h^1(N) = 1, against h^1(N) = 0");
    b.axiom("AX-INITIALIZED-CRIT", "r = 1 and N.B <= 1 make |M(-1)| nonempty");
    b.claim(n(3) + n(2) * n(2), Rel::Gt, v("d"), "7 <= N.(h+2B) = N.C = N.M, against d = 6");
    // N^2 > 0.
    b.axiom("AX-HODGE-INDEX", "M^2 >= N^2 gives M.N >= N^2");
    b.solve("k", {cond(n(4) * (n(2) * v("k")), Rel::Le, sq("C")), cond(v("k"), Rel::Ge, n(1))},
            {1, 2}, "4N^2 <= (M+N)^2 = C^2 = 20 with N^2 = 2k even: N^2 in {2, 4}");
    b.suppose("BN", 2, "N^2 = 2: N.B >= 2 (2-connected) and 5 <= N.C - 2 <= 6 force N.B = 2");
    b.eq(n(2) - n(2) * v("BN") + sq("Bp"), -2, "(N-B)^2 = -2");
    b.eq(n(4) - pr("h", "Bp"), 0, "N.h = 4: h.(N-B) = 0, against h ample");
    b.eq(pr("h", "Bp") - n(3), 1, "N.h = 3: h.(B-N) = 1, B-N a (-2)-curve Gamma");
    b.eq(v("BN") - n(2), 0, "N.Gamma = N.(B-N) = 0, against h^1(B) = 0");
    b.let("CN", fn("hodge_lower", {sq("C"), n(4)}), 9, "N^2 = 4: C.N >= sqrt(80), so C.N >= 9");
    b.claim(v("CN"), Rel::Ge, n(9), "C.N in {9, 10} from C.N - 4 = M.N <= 6");
    b.eq(n(4) - n(2) * n(2) + sq("Bp"), 0, "C.N = 10, (B.N, h.N) = (2,6): (N-B)^2 = 0");
    b.eq(n(6) - pr("h", "Bp"), 2, "h.(N-B) = 2, against degree >= 3");
    b.eq(n(4) - n(2) * n(3) + sq("Bp"), -2, "C.N = 10, (B.N, h.N) = (3,4): (N-B)^2 = -2");
    b.eq(n(4) - pr("h", "Bp"), 0, "h.(N-B) = 0, against h ample");
    b.eq(n(4) - n(2) * n(2) + sq("Bp"), 0, "C.N = 9, (B.N, h.N) = (2,5): (N-B)^2 = 0");
    b.eq(n(5) - pr("h", "Bp"), 1, "h.(N-B) = 1, against degree >= 3");
    b.refute(fn("destab_unresolved", {E::cls("C"), v("d"), E::cls("not-simple")}), Rel::Eq, n(0),
             "every destabilizing pair (M, N, Z') is excluded", "AX-NONSIMPLE-PAIR");
    return b.contradiction();
}

void ulrich_assumptions(Builder& b)
{
    b.assume("B-h", AssumptionKind::Empty, "|B-h| empty");
    b.assume("2h-B", AssumptionKind::Empty, "|2h-B| empty");
}

DerivationScript lemma_gonality()
{
    Builder b("lemma-gonality-2B", "B^2 = 4: curves in |2B| have minimal gonality 4",
              quartic_lattice(4, 6));
    b.cls("C", "2B");
    ulrich_assumptions(b);
    lattice_facts(b, 4, 6);
    b.eq(fn("acm", {E::cls("B")}), 1, "B is initialized aCM");
    b.let("g", fn("genus", {sq("C")}), 9, "C0 in |2B| has genus 9");
    b.axiom("AX-BPF-ACM", "|B| is base point free and h^1(B) = 0");
    b.axiom("AX-LM-SPLIT-EXIST", "E_{C1,Z1} = B + B for a pencil of degree 4, so d0 <= 4");
    b.let("rho3", fn("bn", {v("g"), n(1), n(3)}), -5, "rho(9,1,3) = -5");
    b.claim(v("rho3"), Rel::Lt, n(0), "rho(9,1,d0) <= -5 < 0 for d0 <= 3");
    b.axiom("AX-GONAL-PAIR", "0 -> M -> E -> N -> 0 with M.N = d0 <= 3");
    b.axiom("AX-2CONNECTED", "N^2 = 0: B.N >= 2");
    b.claim(n(2) * n(2), Rel::Gt, n(3), "M.N = C.N = 2B.N >= 4 > 3");
    b.let("BN", fn("hodge_lower", {sq("B"), n(2)}), 3, "N^2 = 2: B.N >= sqrt(8), so B.N >= 3");
    b.claim(n(2) * v("BN") - n(2), Rel::Gt, n(3), "M.N = C.N - 2 >= 4 > 3");
    b.axiom("AX-HODGE-INDEX", "N^2 >= 4: M.N >= N^2 >= 4");
    b.eq(fn("destab_unresolved", {E::cls("C"), n(4), E::cls("gonality-below")}), 0,
         "no pencil of degree <= 3 on a curve in |2B|");
    return b.established("gonality(|2B|) = 4");
}

// C = 2Bp, Bp = B or 3h - B.
DerivationScript case_e(bool mirror)
{
    const std::string bp = mirror ? "3h-B" : "B";
    Builder b(mirror ? "case-B2pos4-Bh6-mirror" : "case-B2pos4-Bh6",
              mirror ? "B^2 = 4, h.B = 6, C in |6h-2B|" : "B^2 = 4, h.B = 6, C in |2B|",
              quartic_lattice(4, 6));
    b.cls("Bp", bp).cls("C", mirror ? "6h-2B" : "2B");
    ulrich_assumptions(b);
    mirror ? b.target(4, 6, 6, -2) : b.target(4, 6, 0, 2);
    b.depends("lemma-gonality-2B");
    lattice_facts(b, 4, 6);
    if (mirror)
        role_facts(b, 4, 6, bp, "2Bp");
    b.eq(fn("acm", {E::cls("Bp")}), 1, "the B-role class is initialized aCM");
    b.let("g", fn("genus", {sq("C")}), 9, "C^2 = 16, g = 9");
    b.let("CH", pr("C", "h"), 12, "C.H = 12");
    force_degree(b, 4);
    b.let("h0E", fn("lm_h0", {v("g"), n(1), v("d")}), 8, "h^0(E) = 12 - d = 8");
    b.let("rho", fn("bn", {v("g"), n(1), v("d")}), -3, "rho(9,1,4) = -3");
    b.claim(v("rho"), Rel::Lt, n(0), "rho < 0");
    b.axiom("AX-GONALITY-2B", "the minimal gonality of curves in |2B| is 4");
    b.axiom("AX-GONAL-PAIR", "0 -> M -> E -> N -> 0, h^1(M) = h^1(N) = 0, M^2 >= N^2, N bpf");
    b.axiom("AX-NONSIMPLE-PAIR", "E indecomposable: M != N and h^0(M-N) > 0, so h.M > h.N");
    b.claim(v("CH"), Rel::Gt, n(2) * n(5), "2h.N < H.C = 12, so h.N <= 5");
    b.forall("n", sq("Bp") - (v("d") + v("n")) + v("n"), Rel::Eq, n(0),
             "(B-N)^2 = B^2 - C.N + N^2 = 0 with C.N = 2B.N = d + N^2");
    b.claim(fn("hodge_lower", {n(4), sq("h")}), Rel::Ge, n(4),
            "N^2 >= 4: h.N >= 4 so h.(B-N) <= 2, against degree >= 3");
    // N^2 = 0.
    b.let("M2", n(2) * (v("h0E") - fn("chi_line", {n(0)}) - n(2)), 8,
          "M^2/2 + 2 = h^0(M) = h^0(E) - h^0(N) = 6, so M^2 = 8");
    b.let("hN", pr("h", "Bp") - n(3), 3, "h.(B-N) = 3 forces h.N = 3");
    b.let("hM", v("CH") - v("hN"), 9, "h.M = H.C - 3 = 9");
    b.let("Mh2", v("M2") - n(2) * v("hM") + sq("h"), -6, "(M-h)^2 = -6");
    b.eq(fn("chi_line", {v("Mh2")}), -1, "chi(M(-1)) = -1, so h^1(M(-1)) != 0");
    b.claim(v("hN") - sq("h"), Rel::Lt, n(0), "h.(N-h) = -1 < 0: |N(-1)| empty, h^1(M(-1)) = 0");
    // N^2 = 2.
    b.let("BN", fn("div", {v("d") + n(2), n(2)}), 3, "C.N - 2 = M.N = 4 gives B.N = 3");
    b.eq(v("BN") - n(2), 1, "(B-N).N = 1 with |B| bpf and |B-N| nonempty");
    b.axiom("AX-2CONNECTED", "B = N + (B-N) with N.(B-N) = 1");
    b.refute(fn("destab_unresolved", {E::cls("C"), v("d"), E::cls("gonal")}), Rel::Eq, n(0),
             "every destabilizing pair (M, N) is excluded", "AX-GONAL-PAIR");
    return b.contradiction();
}

DerivationScript example_delpezzo()
{
    Builder b("example-delpezzo", "non-split extension of aCM line bundles with c1 not aCM",
              delpezzo_cover_lattice());
    b.cls("h", "3l-e1-e2-e3-e4-e5-e6-e7").cls("f", "2l-e1-e2-e3-e4");
    for (int j = 5; j <= 7; ++j)
        b.cls("f" + std::to_string(j), "l-e" + std::to_string(j));
    b.eq(fn("is_even", {}), 1, "the lattice is even");
    b.eq(fn("sig_pos", {}), 1, "signature (1, 7)");
    b.eq(fn("sig_neg", {}), 7, "signature (1, 7)");
    b.eq(sq("h"), 4, "h^2 = 4");
    b.eq(sq("f"), 0, "f^2 = 0");
    b.eq(pr("h", "f"), 4, "h.f = 4");
    b.axiom("AX-ELLIPTIC-EVEN", "|f| and |f_j| are elliptic pencils");
    b.eq(fn("acm", {E::cls("f")}), 1, "f is initialized aCM");
    for (int j = 5; j <= 7; ++j) {
        const std::string fj = "f" + std::to_string(j);
        b.eq(sq(fj), 0, "f_" + std::to_string(j) + "^2 = 0");
        b.eq(pr("h", fj), 4, "h.f_" + std::to_string(j) + " = 4");
        b.eq(fn("acm", {E::cls(fj)}), 1, "f_" + std::to_string(j) + " is initialized aCM");
        b.eq(sq("f-" + fj), -8, "(f-f_" + std::to_string(j) + ")^2 = -8");
        b.eq(pr("h", "f-" + fj), 0, "h.(f-f_j) = 0: h^0 = h^2 = 0");
        b.eq(fn("chi_line", {sq("f-" + fj)}), -2, "h^1(f-f_j) = -chi = 2 != 0");
        b.axiom("AX-NONSPLIT-EXT", "a non-split 0 -> f -> E -> f_j -> 0 exists");
        b.eq(sq("f+" + fj + "-2h"), -8, "(f+f_" + std::to_string(j) + "-2h)^2 = -8");
        b.eq(pr("h", "f+" + fj + "-2h"), 0, "h.(f+f_j-2h) = 0: h^0 = h^2 = 0");
        b.eq(fn("chi_line", {sq("f+" + fj + "-2h")}), -2, "h^1(f+f_j-2h) = 2 != 0");
    }
    return b.established("c1(E) = f + f_j is not aCM for j = 5, 6, 7");
}

DerivationScript reduction(i64 b2, i64 hb, const std::string& companion, i64 c2, i64 chb)
{
    const std::string tag = b2 == 0 ? "reduce-B2zero-Bh3" : "reduce-B2pos2-Bh5";
    Builder b(tag, "reduction of (B^2, h.B) = (" + std::to_string(b2) + ", " + std::to_string(hb) +
                       ") to a (-2)-class",
              quartic_lattice(b2, hb));
    b.cls("Bp", companion);
    lattice_facts(b, b2, hb);
    b.eq(sq("Bp"), c2, "(" + companion + ")^2 = " + std::to_string(c2));
    b.eq(pr("Bp", "h"), chb, "(" + companion + ").h = " + std::to_string(chb));
    b.eq(fn("acm", {E::cls("Bp")}), 1, companion + " is initialized aCM");
    return b.established("Zh + ZB = Zh + Z(" + companion + ")");
}

}  // namespace

std::vector<DerivationScript> builtin_scripts()
{
    return {
        case_a(),          case_b(false),      case_b(true),
        case_c(),          case_d(false),      case_d(true),
        lemma_gonality(),  case_e(false),      case_e(true),
        example_delpezzo(), reduction(0, 3, "h-B", -2, 1), reduction(2, 5, "2h-B", -2, 3),
    };
}

std::optional<DerivationScript> find_builtin(const std::string& tag)
{
    for (auto& s : builtin_scripts())
        if (s.tag == tag)
            return s;
    return std::nullopt;
}

std::optional<DerivationScript> find_case_script(i64 b2, i64 hb, i64 s, i64 t)
{
    for (auto& sc : builtin_scripts())
        if (sc.target && *sc.target == ScriptTarget{b2, hb, s, t})
            return sc;
    return std::nullopt;
}

}  // namespace k3acm
