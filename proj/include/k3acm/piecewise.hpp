#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Piecewise-affine integer functions of one integer variable, used to check
// claims "for all x in Z" and to solve one-variable inequality systems exactly.
namespace k3acm {

using i64 = std::int64_t;

enum class Rel { Lt, Le, Eq, Ne, Ge, Gt };

std::string to_string(Rel rel);
Rel rel_from_string(const std::string& text);
bool holds(i64 lhs, Rel rel, i64 rhs);

// Integer interval; nullopt bounds are infinite.
struct Interval {
    std::optional<i64> lo;
    std::optional<i64> hi;

    bool empty() const noexcept { return lo && hi && *lo > *hi; }
    bool finite() const noexcept { return lo.has_value() && hi.has_value(); }
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct Affine {
    i64 slope = 0;
    i64 offset = 0;
    i64 at(i64 x) const;
    friend bool operator==(const Affine&, const Affine&) = default;
};

class PiecewiseLinear {
public:
    struct Piece {
        Interval domain;
        Affine f;
    };

    static PiecewiseLinear constant(i64 c);
    static PiecewiseLinear identity();

    bool is_constant() const noexcept;
    // Requires is_constant().
    i64 constant_value() const;
    i64 at(i64 x) const;
    const std::vector<Piece>& pieces() const noexcept { return pieces_; }

    friend PiecewiseLinear operator+(const PiecewiseLinear& a, const PiecewiseLinear& b);
    friend PiecewiseLinear operator-(const PiecewiseLinear& a, const PiecewiseLinear& b);
    friend PiecewiseLinear operator-(const PiecewiseLinear& a);
    friend PiecewiseLinear operator*(i64 k, const PiecewiseLinear& a);
    static PiecewiseLinear max(const PiecewiseLinear& a, const PiecewiseLinear& b);
    static PiecewiseLinear min(const PiecewiseLinear& a, const PiecewiseLinear& b);

    // Integer points where `f rel 0` holds, as disjoint sorted intervals.
    std::vector<Interval> solve(Rel rel) const;
    // True iff `f rel 0` at every integer point.
    bool holds_everywhere(Rel rel) const;

private:
    std::vector<Piece> pieces_;  // contiguous, ordered, covering Z
};

// Intersection of two sorted disjoint interval lists.
std::vector<Interval> intersect(const std::vector<Interval>& a, const std::vector<Interval>& b);

}  // namespace k3acm
