#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the plain data types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <utility>
#include <vector>

#include "k3acm/casework.hpp"
#include "k3acm/lattice.hpp"

namespace oracle {

using k3acm::i64;
using k3acm::IntMatrix;

inline i64 dot(const IntMatrix& g, const std::vector<i64>& a, const std::vector<i64>& b)
{
    i64 sum = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            sum += a[i] * g[i][j] * b[j];
    return sum;
}

// Eigenvalue signs by cyclic Jacobi rotations in long double; adequate for the
// small, well-conditioned integer forms used here.
inline std::pair<int, int> signature(const IntMatrix& g)
{
    const std::size_t n = g.size();
    std::vector<std::vector<long double>> a(n, std::vector<long double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = static_cast<long double>(g[i][j]);
    for (int sweep = 0; sweep < 100; ++sweep) {
        long double off = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                off += a[i][j] * a[i][j];
        if (off < 1e-24L)
            break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < 1e-30L)
                    continue;
                const long double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                const long double t = (theta >= 0 ? 1 : -1) /
                                      (std::fabs(theta) + std::sqrt(theta * theta + 1));
                const long double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const long double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const long double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    int pos = 0, neg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][i] > 1e-9L)
            ++pos;
        else if (a[i][i] < -1e-9L)
            ++neg;
    }
    return {pos, neg};
}

struct AcmRow {
    const char* status;  // NotAcm, Acm, NeedsAssumption, AcmUlrich
    char tag;            // a-d, or '-'
};

// Closed-form table for O_X(B) initialized aCM on a quartic.
inline AcmRow acm_table(i64 b2, i64 hb, bool emptiness_known)
{
    if (b2 == -2 && 1 <= hb && hb <= 3)
        return {"Acm", 'a'};
    if (b2 == 0 && (hb == 3 || hb == 4))
        return {"Acm", 'b'};
    if (b2 == 2 && hb == 5)
        return {"Acm", 'c'};
    if (b2 == 4 && hb == 6)
        return {emptiness_known ? "AcmUlrich" : "NeedsAssumption", 'd'};
    return {"NotAcm", '-'};
}

inline bool rel_holds(i64 a, k3acm::Rel r, i64 b)
{
    switch (r) {
    case k3acm::Rel::Lt: return a < b;
    case k3acm::Rel::Le: return a <= b;
    case k3acm::Rel::Eq: return a == b;
    case k3acm::Rel::Ne: return a != b;
    case k3acm::Rel::Ge: return a >= b;
    case k3acm::Rel::Gt: return a > b;
    }
    return false;
}

inline i64 least_root(i64 n)
{
    i64 m = 1;
    while (m * m < n)
        ++m;
    return m;
}

inline bool point_ok(const k3acm::CaseSpec& spec, i64 s, i64 t)
{
    const IntMatrix& g = spec.lattice.gram();
    const std::vector<i64> c{s, t};
    for (const auto& k : spec.constraints) {
        using K = k3acm::ConstraintKind;
        bool ok = true;
        switch (k.kind) {
        case K::LinearIneq:
            ok = rel_holds(dot(g, c, k.against.coords), k.rel, k.bound);
            break;
        case K::QuadraticIneq:
            ok = rel_holds(dot(g, c, c), k.rel, k.bound);
            break;
        case K::HodgeLower:
            ok = dot(g, c, k.against.coords) >=
                 least_root(k.bound * dot(g, k.against.coords, k.against.coords));
            break;
        case K::AbsTAtLeast:
            ok = std::llabs(t) >= k.bound;
            break;
        case K::Custom: {
            const i64 v = dot(g, c, k.against.coords);
            ok = ((v % k.modulus) + k.modulus) % k.modulus ==
                 ((k.residue % k.modulus) + k.modulus) % k.modulus;
            break;
        }
        }
        if (!ok)
            return false;
    }
    return true;
}

struct BruteResult {
    std::vector<k3acm::Point> points;
    bool touches_boundary = false;
};

inline BruteResult enumerate(const k3acm::CaseSpec& spec)
{
    BruteResult r;
    for (i64 s = -spec.box; s <= spec.box; ++s)
        for (i64 t = -spec.box; t <= spec.box; ++t)
            if (point_ok(spec, s, t)) {
                r.points.emplace_back(s, t);
                if (std::llabs(s) == spec.box || std::llabs(t) == spec.box)
                    r.touches_boundary = true;
            }
    return r;
}

inline std::vector<i64> random_vector(std::mt19937_64& rng, std::size_t n, i64 lo, i64 hi)
{
    std::uniform_int_distribution<i64> d(lo, hi);
    std::vector<i64> v(n);
    for (auto& x : v)
        x = d(rng);
    return v;
}

}  // namespace oracle
