#include "k3acm/destabilize.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "k3acm/checked.hpp"
#include "k3acm/error.hpp"
#include "k3acm/invariants.hpp"

namespace k3acm {

namespace {

using checked::add;
using checked::mul;
using checked::sub;

i64 abs64(i64 v) { return v < 0 ? checked::neg(v) : v; }

std::string str(i64 v) { return std::to_string(v); }

struct RefClass {
    DivClass cls;
    std::string name;
    bool acm = false;
    bool bpf = false;
    bool moving = false;
    i64 sq = 0;
};

bool has_assumption(const Assumptions& as, const DivClass& d, AssumptionKind kind)
{
    for (const auto& a : as)
        if (a.subject == d && a.kind == kind)
            return true;
    return false;
}

// Basis classes that classify as initialized aCM, their companions, and any
// class asserted base point free or an elliptic pencil.
std::vector<RefClass> reference_classes(const Lattice& L, const Assumptions& as,
                                        std::vector<std::string>& missing)
{
    std::vector<RefClass> refs;
    auto push = [&](const DivClass& cls, bool acm) {
        for (auto& r : refs)
            if (r.cls == cls) {
                r.acm = r.acm || acm;
                return;
            }
        RefClass r;
        r.cls = cls;
        r.name = format_class(L, cls);
        r.acm = acm;
        r.sq = self_int(L, cls);
        refs.push_back(r);
    };
    for (std::size_t i = 0; i < L.rank(); ++i) {
        const DivClass b = DivClass::basis(L.rank(), i);
        if (b == L.ample())
            continue;
        AcmClassification cls;
        try {
            cls = is_initialized_acm(L, b, as);
        } catch (const Error&) {
            continue;
        }
        for (const auto& m : cls.missing)
            missing.push_back(std::string(to_string(m.kind)) + "(" + format_class(L, m.subject) +
                              ")");
        if (!cls.initialized_acm())
            continue;
        push(b, true);
        for (const auto& comp : acm_companions(L, b, cls, as))
            if (comp.rule != "dual")
                push(comp.cls, true);
    }
    for (const auto& a : as)
        if (a.kind == AssumptionKind::BasePointFree || a.kind == AssumptionKind::EllipticPencil)
            push(a.subject, false);
    for (auto& r : refs) {
        const bool asserted = has_assumption(as, r.cls, AssumptionKind::BasePointFree) ||
                              has_assumption(as, r.cls, AssumptionKind::EllipticPencil);
        r.bpf = asserted || (r.acm && r.sq >= 2);
        r.moving = asserted || (r.acm && r.sq >= 0);
    }
    return refs;
}

struct Setup {
    const Lattice& L;
    const Assumptions& as;
    DivClass c;
    DivClass h;
    i64 c2 = 0;
    i64 hc = 0;
    i64 d = 0;
    PairMode mode = PairMode::NotSimple;
    std::vector<RefClass> refs;
};

// A class a*N + K with K in the lattice, evaluated through N's pairings.
struct Virtual {
    i64 a = 0;
    DivClass k;
};

struct Unknown {
    std::vector<i64> v;  // N.e_i
    i64 n = 0;           // N^2

    i64 dot(const DivClass& k) const
    {
        i64 s = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            s = add(s, mul(v[i], k.coords[i]));
        return s;
    }
    i64 sq(const Lattice& L, const Virtual& x) const
    {
        return add(add(mul(mul(x.a, x.a), n), mul(mul(2, x.a), dot(x.k))), self_int(L, x.k));
    }
    i64 with(const Lattice& L, const Virtual& x, const DivClass& q) const
    {
        return add(mul(x.a, dot(q)), pair(L, x.k, q));
    }
    i64 with(const Lattice& L, const Virtual& x, const Virtual& y) const
    {
        return add(add(mul(mul(x.a, y.a), n), add(mul(x.a, dot(y.k)), mul(y.a, dot(x.k)))),
                   pair(L, x.k, y.k));
    }
};

// Structural facts every destabilizing N satisfies. Returns the tag of the
// first violated one, or an empty string.
std::string structural_violation(const Setup& S, const Unknown& u)
{
    const Lattice& L = S.L;
    const i64 x = u.dot(S.h);
    const i64 cn = u.dot(S.c);
    const i64 mn = sub(cn, u.n);
    const i64 msq = add(sub(S.c2, mul(2, cn)), u.n);
    if (x < 3 || sub(S.hc, x) < 3)
        return "degree-at-least-3";
    if (mul(2, x) > S.hc)
        return "C.M>=C.N";
    if (msq < u.n)
        return "M^2>=N^2";
    if (u.n > 0 && mn < u.n)
        return "hodge-M.N";
    IntMatrix g = L.gram();
    for (std::size_t i = 0; i < g.size(); ++i)
        g[i].push_back(u.v[i]);
    g.push_back(u.v);
    g.back().push_back(u.n);
    if (inertia(g).positive > 1)
        return "hodge-signature";
    for (const auto& p : S.refs) {
        const i64 np = u.dot(p.cls);
        if (u.n == 0 && p.bpf && p.sq > 0 && np < 2)
            return "2-connected";
        if (u.n > 0 && p.moving && p.acm && np < 2)
            return "2-connected";
    }
    return {};
}

// Admissible range of M.N for the mode.
std::pair<i64, i64> mn_window(PairMode mode, i64 d)
{
    switch (mode) {
    case PairMode::NotSimple:
        return {0, d};
    case PairMode::GonalPencil:
        return {d, d};
    case PairMode::GonalityBelow:
        return {1, d - 1};
    }
    return {0, d};
}

NumericClaim claim(std::string statement, i64 lhs, Rel rel, i64 rhs, std::string rule)
{
    return {std::move(statement), lhs, rel, rhs, std::move(rule)};
}

// Applies the elimination rules in a fixed order; fills rule, axiom, claims.
void eliminate(const Setup& S, const Unknown& u, PairCandidate& cand)
{
    const Lattice& L = S.L;
    const DivClass& h = S.h;
    const Virtual n{1, DivClass::zero(L.rank())};
    auto& cl = cand.claims;
    auto done = [&](std::string rule, std::string axiom) {
        cand.rule = std::move(rule);
        cand.axiom = std::move(axiom);
    };
    auto sq = [&](const Virtual& x) { return u.sq(L, x); };
    auto deg = [&](const Virtual& x) { return u.with(L, x, h); };

    const Virtual diff{-2, S.c};  // M - N
    if (cand.len_zprime == 0 && sq(diff) == 0 && deg(diff) == 0) {
        cl.push_back(claim("(M-N)^2 = 0", sq(diff), Rel::Eq, 0, "ARITH"));
        cl.push_back(claim("h.(M-N) = 0, so M = N numerically", deg(diff), Rel::Eq, 0,
                           "AX-HODGE-INDEX"));
        cl.push_back(claim("Ext^1(N,N) = H^1(O_X) = 0, so E = N + N", 1, Rel::Eq, 1,
                           "AX-INDECOMPOSABLE"));
        return done("split", "AX-INDECOMPOSABLE");
    }
    if (u.n == 0 && cand.multiplicity >= 2 && cand.len_zprime == 0) {
        cl.push_back(claim("N = rF with r = " + str(cand.multiplicity), cand.multiplicity, Rel::Ge,
                           2, "AX-VA-DEGREE3"));
        cl.push_back(claim("h^1(N) = r-1 > 0 but h^1(N) <= h^1(E) + h^2(M) = 0",
                           cand.multiplicity - 1, Rel::Gt, 0, "AX-ELLIPTIC-H1"));
        return done("elliptic-h1", "AX-ELLIPTIC-H1");
    }
    const Virtual mh{-1, S.c - h};
    if (sq(mh) >= -2 && deg(mh) > 0) {
        cl.push_back(claim("(M-h)^2 >= -2", sq(mh), Rel::Ge, -2, "AX-RR-EFFECTIVE"));
        cl.push_back(claim("h.(M-h) > 0", deg(mh), Rel::Gt, 0, "AX-RR-EFFECTIVE"));
        cl.push_back(claim("|M-h| nonempty inside E(-1)", 1, Rel::Eq, 1, "AX-INITIALIZED-CRIT"));
        return done("initialized-rr", "AX-INITIALIZED-CRIT");
    }
    for (const auto& p : S.refs) {
        const Virtual dn{1, -p.cls};
        const i64 d2 = sq(dn);
        const i64 dh = deg(dn);
        if (d2 == 0 && abs64(dh) >= 1 && abs64(dh) <= 2) {
            cl.push_back(claim("(N-(" + p.name + "))^2 = 0", d2, Rel::Eq, 0, "ARITH"));
            cl.push_back(claim("|h.(N-(" + p.name + "))| <= 2", abs64(dh), Rel::Le, 2, "ARITH"));
            cl.push_back(claim("a nonzero effective class of square 0 has degree >= 3",
                               abs64(dh), Rel::Lt, 3, "AX-VA-DEGREE3"));
            return done("square0-low-degree", "AX-VA-DEGREE3");
        }
        if (d2 == -2 && dh == 0) {
            cl.push_back(claim("(N-(" + p.name + "))^2 = -2", d2, Rel::Eq, -2, "ARITH"));
            cl.push_back(claim("h.(N-(" + p.name + ")) = 0 with h ample", dh, Rel::Eq, 0,
                               "AX-RR-EFFECTIVE"));
            return done("ample-degree", "AX-RR-EFFECTIVE");
        }
        const Virtual pn{-1, p.cls};
        if (!(sq(pn) >= -2 && deg(pn) > 0))
            continue;
        auto effective_claims = [&] {
            cl.push_back(claim("(" + p.name + "-N)^2 >= -2", sq(pn), Rel::Ge, -2,
                               "AX-RR-EFFECTIVE"));
            cl.push_back(claim("h.(" + p.name + "-N) > 0", deg(pn), Rel::Gt, 0,
                               "AX-RR-EFFECTIVE"));
        };
        const i64 h0n = std::max<i64>(2, add(2, u.n / 2));
        const i64 h0p = chi_line(p.sq);
        if (p.acm && h0n > h0p) {
            effective_claims();
            cl.push_back(claim("h^0(N) > chi(" + p.name + ") = h^0(" + p.name + ")", h0n, Rel::Gt,
                               h0p, "AX-ACM-VANISH"));
            return done("acm-sections", "AX-ACM-VANISH");
        }
        const i64 npn = u.with(L, n, pn);
        if (p.bpf && p.sq > 0 && npn <= 1) {
            effective_claims();
            cl.push_back(claim("N.(" + p.name + "-N) <= 1 splits a 2-connected member", npn,
                               Rel::Le, 1, "AX-2CONNECTED"));
            return done("two-connected", "AX-2CONNECTED");
        }
        const DivClass rest = S.c - h - p.cls;
        const Verdict v = effectivity(L, rest, S.as);
        if (v.value == Effectivity::Effective) {
            effective_claims();
            cl.push_back(claim("C-h-(" + p.name + ") effective (" + v.reason +
                                   "), so M-h = (C-h-P)+(P-N) is effective",
                               1, Rel::Eq, 1, "AX-INITIALIZED-CRIT"));
            return done("initialized-sum", "AX-INITIALIZED-CRIT");
        }
    }
    const Virtual nh{1, -h};
    const i64 dh = deg(mh);
    const i64 chi = chi_line(sq(mh));
    if (dh > 0 && deg(nh) < 0 && chi != 0) {
        cl.push_back(claim("h.(M-h) > 0, so h^2(M-h) = 0", dh, Rel::Gt, 0, "AX-SERRE"));
        cl.push_back(claim("h.(N-h) < 0, so h^1(M-h) <= h^1(E(-1)) = 0", deg(nh), Rel::Lt, 0,
                           "AX-ACM-VANISH"));
        cl.push_back(claim("h^0(M-h) = 0 forces chi(M-h) = 0", chi, Rel::Ne, 0,
                           "AX-INITIALIZED-CRIT"));
        return done("twist-chi", "AX-INITIALIZED-CRIT");
    }
    done("unresolved", "");
}

std::vector<PairCandidate> expand(const Setup& S, const Unknown& u)
{
    PairCandidate base;
    base.pairing = u.v;
    base.n_sq = u.n;
    base.h_n = u.dot(S.h);
    base.c_n = u.dot(S.c);
    base.m_n = sub(base.c_n, u.n);
    base.m_sq = add(sub(S.c2, mul(2, base.c_n)), u.n);
    base.len_zprime = S.mode == PairMode::NotSimple ? sub(S.d, base.m_n) : 0;
    if (u.n != 0)
        return {base};
    // N = rF needs r | N.e_i for every i.
    i64 g = 0;
    for (i64 v : u.v)
        g = std::gcd(g, v);
    std::vector<PairCandidate> out;
    for (i64 r = 1; r <= g; ++r)
        if (g % r == 0 && base.h_n % r == 0 && base.h_n / r >= 3) {
            PairCandidate c = base;
            c.multiplicity = r;
            out.push_back(c);
        }
    return out;
}

}  // namespace

std::string_view to_string(PairMode mode)
{
    switch (mode) {
    case PairMode::NotSimple:
        return "not-simple";
    case PairMode::GonalPencil:
        return "gonal";
    case PairMode::GonalityBelow:
        return "gonality-below";
    }
    return "?";
}

PairMode pair_mode_from_string(std::string_view text)
{
    for (PairMode m : {PairMode::NotSimple, PairMode::GonalPencil, PairMode::GonalityBelow})
        if (to_string(m) == text)
            return m;
    throw Error(Errc::ParseError, "unknown pair mode '" + std::string(text) + "'");
}

std::vector<PairElimination> enumerate_destabilizing(const Lattice& L, const DivClass& c, i64 d,
                                                     const Assumptions& assumptions, PairMode mode)
{
    if (L.rank() != 2)
        throw Error(Errc::UnsupportedRank, "destabilizing pairs are enumerated in rank 2 only");
    if (c.size() != 2)
        throw Error(Errc::DimensionMismatch, "class length does not match lattice rank");
    check_assumptions(L, assumptions);

    std::vector<std::string> missing;
    Setup S{L, assumptions, c, L.ample(), 0, 0, 0, mode, {}};
    S.c2 = self_int(L, c);
    S.hc = degree(L, c);
    S.d = d;
    S.mode = mode;
    if (S.c2 < 4 || d < 1)
        throw Error(Errc::PreconditionViolated, "need C^2 >= 4 and d >= 1");
    S.refs = reference_classes(L, assumptions, missing);

    // Box for N.e_i: |h^2 (N.e_i) - x (h.e_i)|^2 <= (x^2 - h^2 N^2)((h.e_i)^2 - h^2 e_i^2)
    // with 0 <= N^2 and x = h.N <= h.C.
    const i64 h2 = self_int(L, S.h);
    std::vector<std::pair<i64, i64>> v_range;
    for (std::size_t i = 0; i < 2; ++i) {
        const DivClass e = DivClass::basis(2, i);
        const i64 he = pair(L, S.h, e);
        const i64 disc = std::max<i64>(0, sub(mul(he, he), mul(h2, self_int(L, e))));
        const i64 spread = add(checked::isqrt_ceil(mul(mul(S.hc, S.hc), disc)),
                               mul(S.hc, abs64(he)));
        const i64 bound = add(checked::ceil_div(spread, h2), 1);
        v_range.push_back({-bound, bound});
    }

    const auto [lo_mn, hi_mn] = mn_window(mode, d);
    const i64 n_max = S.c2 / 4;
    std::map<i64, std::vector<Unknown>> region;  // N^2 -> structural survivors
    std::map<i64, std::map<std::string, i64>> rejected;
    for (i64 nsq = 0; nsq <= n_max; nsq += 2)
        for (i64 v0 = v_range[0].first; v0 <= v_range[0].second; ++v0)
            for (i64 v1 = v_range[1].first; v1 <= v_range[1].second; ++v1) {
                Unknown u{{v0, v1}, nsq};
                const std::string why = structural_violation(S, u);
                if (why.empty())
                    region[nsq].push_back(std::move(u));
                else
                    ++rejected[nsq][why];
            }

    std::vector<PairElimination> out;
    for (i64 nsq = 0; nsq <= n_max; nsq += 2) {
        PairElimination rec;
        rec.c = c;
        rec.d = d;
        rec.mode = mode;
        rec.n_square = nsq;
        rec.trace.push_back(claim("N^2 = " + str(nsq) + " is even", nsq % 2, Rel::Eq, 0,
                                  "ARITH"));
        rec.trace.push_back(claim("4N^2 <= M^2 + 2M.N + N^2 = C^2", mul(4, nsq), Rel::Le, S.c2,
                                  "AX-HODGE-INDEX"));
        for (const auto& [why, count] : rejected[nsq])
            rec.trace.push_back(claim("pairings (N.e) excluded by " + why, count, Rel::Ge, 0,
                                      "STRUCTURAL"));
        auto it = region.find(nsq);
        const std::vector<Unknown> ns = it == region.end() ? std::vector<Unknown>{} : it->second;
        if (ns.empty()) {
            rec.trace.push_back(claim("pairings (N.e) meeting every structural bound", 0, Rel::Eq,
                                      0, "STRUCTURAL"));
            rec.outcome = "empty-region";
            out.push_back(std::move(rec));
            continue;
        }
        i64 min_mn = INT64_MAX, max_mn = INT64_MIN;
        for (const auto& u : ns) {
            const i64 mn = sub(u.dot(c), nsq);
            min_mn = std::min(min_mn, mn);
            max_mn = std::max(max_mn, mn);
        }
        if (min_mn > hi_mn) {
            rec.trace.push_back(claim("M.N = C.N - N^2 >= " + str(min_mn) + " > " + str(hi_mn),
                                      min_mn, Rel::Gt, hi_mn, "STRUCTURAL"));
            rec.outcome = "degree-bound";
            out.push_back(std::move(rec));
            continue;
        }
        if (max_mn < lo_mn) {
            rec.trace.push_back(claim("M.N = C.N - N^2 <= " + str(max_mn) + " < " + str(lo_mn),
                                      max_mn, Rel::Lt, lo_mn, "STRUCTURAL"));
            rec.outcome = "degree-bound";
            out.push_back(std::move(rec));
            continue;
        }
        for (const auto& u : ns) {
            const i64 mn = sub(u.dot(c), nsq);
            if (mn < lo_mn || mn > hi_mn)
                continue;
            for (auto& cand : expand(S, u)) {
                eliminate(S, u, cand);
                rec.len_zprime = std::max(rec.len_zprime, cand.len_zprime);
                rec.candidates.push_back(std::move(cand));
            }
        }
        rec.trace.push_back(claim("candidates with " + str(lo_mn) + " <= M.N <= " + str(hi_mn),
                                  static_cast<i64>(rec.candidates.size()), Rel::Ge, 0,
                                  "STRUCTURAL"));
        const bool all = std::all_of(rec.candidates.begin(), rec.candidates.end(),
                                     [](const PairCandidate& k) { return k.eliminated(); });
        if (all) {
            rec.outcome = rec.candidates.empty() ? "degree-bound" : "all-candidates-eliminated";
        } else {
            rec.outcome = "unresolved";
            rec.missing = missing;
            if (rec.missing.empty())
                rec.missing.push_back("no elimination rule applies");
        }
        out.push_back(std::move(rec));
    }

    PairElimination tail;
    tail.c = c;
    tail.d = d;
    tail.mode = mode;
    tail.n_square = n_max + 1 + (n_max + 1) % 2;
    tail.aggregate = true;
    tail.trace.push_back(claim("4N^2 > C^2 for N^2 >= " + str(tail.n_square),
                               mul(4, tail.n_square), Rel::Gt, S.c2, "AX-HODGE-INDEX"));
    tail.outcome = "hodge-square-bound";
    out.push_back(std::move(tail));
    return out;
}

i64 unresolved_count(const std::vector<PairElimination>& records)
{
    i64 k = 0;
    for (const auto& r : records)
        for (const auto& c : r.candidates)
            if (!c.eliminated())
                ++k;
    return k;
}

}  // namespace k3acm
