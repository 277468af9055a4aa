#pragma once

#include <cstdint>
#include <string>

#include "k3acm/error.hpp"

// Overflow-checked 64-bit integer arithmetic. Every operation throws
// Error(Errc::Overflow) instead of wrapping.
namespace k3acm::checked {

using i64 = std::int64_t;

inline i64 add(i64 a, i64 b)
{
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(Errc::Overflow, std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline i64 sub(i64 a, i64 b)
{
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error(Errc::Overflow, std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline i64 mul(i64 a, i64 b)
{
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(Errc::Overflow, std::to_string(a) + " * " + std::to_string(b));
    return r;
}

inline i64 neg(i64 a) { return sub(0, a); }

// Floor division (rounds toward negative infinity). b != 0.
inline i64 floor_div(i64 a, i64 b)
{
    if (b == 0)
        throw Error(Errc::PreconditionViolated, "division by zero");
    if (a == INT64_MIN && b == -1)
        throw Error(Errc::Overflow, "INT64_MIN / -1");
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline i64 ceil_div(i64 a, i64 b)
{
    return neg(floor_div(neg(a), b));
}

// Smallest m >= 0 with m*m >= n (n >= 0), by integer Newton iteration.
i64 isqrt_ceil(i64 n);

// Largest m >= 0 with m*m <= n (n >= 0).
i64 isqrt_floor(i64 n);

}  // namespace k3acm::checked
