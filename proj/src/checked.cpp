#include "k3acm/checked.hpp"

namespace k3acm::checked {

i64 isqrt_floor(i64 n)
{
    if (n < 0)
        throw Error(Errc::PreconditionViolated, "isqrt of negative " + std::to_string(n));
    if (n < 2)
        return n;
    // Newton from above: x_{k+1} = (x_k + n / x_k) / 2 decreases to floor(sqrt(n)).
    __int128 x = n;
    __int128 y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return static_cast<i64>(x);
}

i64 isqrt_ceil(i64 n)
{
    i64 r = isqrt_floor(n);
    return (static_cast<__int128>(r) * r == n) ? r : r + 1;
}

}  // namespace k3acm::checked
