#include "k3acm/piecewise.hpp"

#include <algorithm>

#include "k3acm/checked.hpp"
#include "k3acm/error.hpp"

namespace k3acm {

namespace {

using checked::ceil_div;
using checked::floor_div;

// +inf-aware comparisons on optional upper bounds.
bool hi_less(const std::optional<i64>& a, const std::optional<i64>& b)
{
    if (!a)
        return false;
    if (!b)
        return true;
    return *a < *b;
}

Interval clip(const Interval& domain, const Interval& part)
{
    Interval r = domain;
    if (part.lo && (!r.lo || *part.lo > *r.lo))
        r.lo = part.lo;
    if (part.hi && (!r.hi || *part.hi < *r.hi))
        r.hi = part.hi;
    return r;
}

// Integer x in Z with a*x + b >= 0, as an interval (a != 0).
Interval ge_zero(i64 a, i64 b)
{
    // a*x >= -b
    if (a > 0)
        return {ceil_div(checked::neg(b), a), std::nullopt};
    return {std::nullopt, floor_div(checked::neg(b), a)};
}

std::vector<Interval> solve_affine(const Affine& f, const Interval& domain, Rel rel)
{
    std::vector<Interval> out;
    auto push = [&](const Interval& part) {
        Interval c = clip(domain, part);
        if (!c.empty())
            out.push_back(c);
    };
    const i64 a = f.slope;
    const i64 b = f.offset;
    if (a == 0) {
        if (holds(b, rel, 0))
            out.push_back(domain);
        return out;
    }
    switch (rel) {
    case Rel::Ge: push(ge_zero(a, b)); break;
    case Rel::Gt: push(ge_zero(a, checked::sub(b, 1))); break;
    case Rel::Le: push(ge_zero(checked::neg(a), checked::neg(b))); break;
    case Rel::Lt: push(ge_zero(checked::neg(a), checked::sub(checked::neg(b), 1))); break;
    case Rel::Eq:
        if (b % a == 0)
            push({checked::neg(b) / a, checked::neg(b) / a});
        break;
    case Rel::Ne:
        if (b % a != 0) {
            out.push_back(domain);
        } else {
            const i64 root = checked::neg(b) / a;
            push({std::nullopt, checked::sub(root, 1)});
            push({checked::add(root, 1), std::nullopt});
        }
        break;
    }
    return out;
}

std::vector<Interval> merge_adjacent(std::vector<Interval> v)
{
    std::vector<Interval> out;
    for (auto& iv : v) {
        if (!out.empty() && out.back().hi && iv.lo && *out.back().hi + 1 == *iv.lo) {
            out.back().hi = iv.hi;
            continue;
        }
        out.push_back(iv);
    }
    return out;
}

}  // namespace

std::string to_string(Rel rel)
{
    switch (rel) {
    case Rel::Lt: return "<";
    case Rel::Le: return "<=";
    case Rel::Eq: return "=";
    case Rel::Ne: return "!=";
    case Rel::Ge: return ">=";
    case Rel::Gt: return ">";
    }
    return "?";
}

Rel rel_from_string(const std::string& text)
{
    if (text == "<") return Rel::Lt;
    if (text == "<=") return Rel::Le;
    if (text == "=" || text == "==") return Rel::Eq;
    if (text == "!=") return Rel::Ne;
    if (text == ">=") return Rel::Ge;
    if (text == ">") return Rel::Gt;
    throw Error(Errc::ParseError, "unknown relation '" + text + "'");
}

bool holds(i64 lhs, Rel rel, i64 rhs)
{
    switch (rel) {
    case Rel::Lt: return lhs < rhs;
    case Rel::Le: return lhs <= rhs;
    case Rel::Eq: return lhs == rhs;
    case Rel::Ne: return lhs != rhs;
    case Rel::Ge: return lhs >= rhs;
    case Rel::Gt: return lhs > rhs;
    }
    return false;
}

i64 Affine::at(i64 x) const { return checked::add(checked::mul(slope, x), offset); }

PiecewiseLinear PiecewiseLinear::constant(i64 c)
{
    PiecewiseLinear p;
    p.pieces_.push_back({{}, {0, c}});
    return p;
}

PiecewiseLinear PiecewiseLinear::identity()
{
    PiecewiseLinear p;
    p.pieces_.push_back({{}, {1, 0}});
    return p;
}

bool PiecewiseLinear::is_constant() const noexcept
{
    for (const auto& piece : pieces_)
        if (piece.f.slope != 0 || piece.f.offset != pieces_.front().f.offset)
            return false;
    return true;
}

i64 PiecewiseLinear::constant_value() const
{
    if (!is_constant())
        throw Error(Errc::PreconditionViolated, "expression depends on the free variable");
    return pieces_.front().f.offset;
}

i64 PiecewiseLinear::at(i64 x) const
{
    for (const auto& piece : pieces_)
        if ((!piece.domain.lo || *piece.domain.lo <= x) && (!piece.domain.hi || x <= *piece.domain.hi))
            return piece.f.at(x);
    throw Error(Errc::PreconditionViolated, "piecewise function does not cover point");
}

namespace {

struct Refined {
    Interval domain;
    Affine fa;
    Affine fb;
};

std::vector<Refined> refine(const std::vector<PiecewiseLinear::Piece>& a,
                            const std::vector<PiecewiseLinear::Piece>& b)
{
    std::vector<Refined> out;
    std::size_t i = 0, j = 0;
    std::optional<i64> start;  // nullopt = -inf
    while (i < a.size() && j < b.size()) {
        const auto& ha = a[i].domain.hi;
        const auto& hb = b[j].domain.hi;
        std::optional<i64> end = hi_less(ha, hb) ? ha : hb;
        out.push_back({{start, end}, a[i].f, b[j].f});
        if (!end)
            break;
        if (ha == end)
            ++i;
        if (hb == end)
            ++j;
        start = checked::add(*end, 1);
    }
    return out;
}

}  // namespace

PiecewiseLinear operator+(const PiecewiseLinear& a, const PiecewiseLinear& b)
{
    PiecewiseLinear r;
    for (const auto& p : refine(a.pieces_, b.pieces_))
        r.pieces_.push_back({p.domain, {checked::add(p.fa.slope, p.fb.slope),
                                        checked::add(p.fa.offset, p.fb.offset)}});
    return r;
}

PiecewiseLinear operator*(i64 k, const PiecewiseLinear& a)
{
    PiecewiseLinear r = a;
    for (auto& p : r.pieces_)
        p.f = {checked::mul(k, p.f.slope), checked::mul(k, p.f.offset)};
    return r;
}

PiecewiseLinear operator-(const PiecewiseLinear& a) { return -1 * a; }

PiecewiseLinear operator-(const PiecewiseLinear& a, const PiecewiseLinear& b) { return a + (-b); }

PiecewiseLinear PiecewiseLinear::max(const PiecewiseLinear& a, const PiecewiseLinear& b)
{
    PiecewiseLinear r;
    for (const auto& p : refine(a.pieces_, b.pieces_)) {
        const Affine diff{checked::sub(p.fa.slope, p.fb.slope),
                          checked::sub(p.fa.offset, p.fb.offset)};
        if (diff.slope == 0) {
            r.pieces_.push_back({p.domain, diff.offset >= 0 ? p.fa : p.fb});
            continue;
        }
        // Split the domain where diff changes sign; each side is a clipped half-line.
        const Interval a_wins = clip(p.domain, ge_zero(diff.slope, diff.offset));
        const Interval b_wins = clip(
            p.domain, ge_zero(checked::neg(diff.slope), checked::sub(checked::neg(diff.offset), 1)));
        std::vector<std::pair<Interval, Affine>> parts;
        if (!a_wins.empty())
            parts.push_back({a_wins, p.fa});
        if (!b_wins.empty())
            parts.push_back({b_wins, p.fb});
        if (parts.size() == 2 && diff.slope > 0)
            std::swap(parts[0], parts[1]);
        for (auto& [dom, f] : parts)
            r.pieces_.push_back({dom, f});
    }
    return r;
}

PiecewiseLinear PiecewiseLinear::min(const PiecewiseLinear& a, const PiecewiseLinear& b)
{
    return -max(-a, -b);
}

std::vector<Interval> PiecewiseLinear::solve(Rel rel) const
{
    std::vector<Interval> all;
    for (const auto& piece : pieces_)
        for (auto& iv : solve_affine(piece.f, piece.domain, rel))
            all.push_back(iv);
    return merge_adjacent(std::move(all));
}

bool PiecewiseLinear::holds_everywhere(Rel rel) const
{
    auto s = solve(rel);
    return s.size() == 1 && !s.front().lo && !s.front().hi;
}

std::vector<Interval> intersect(const std::vector<Interval>& a, const std::vector<Interval>& b)
{
    std::vector<Interval> out;
    for (const auto& x : a)
        for (const auto& y : b) {
            Interval c = clip(x, y);
            if (!c.empty())
                out.push_back(c);
        }
    std::sort(out.begin(), out.end(), [](const Interval& l, const Interval& r) {
        if (!l.lo)
            return r.lo.has_value();
        return r.lo && *l.lo < *r.lo;
    });
    return merge_adjacent(std::move(out));
}

}  // namespace k3acm
