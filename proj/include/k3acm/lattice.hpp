#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace k3acm {

using i64 = std::int64_t;
using IntMatrix = std::vector<std::vector<i64>>;

// A divisor class, as integer coefficients in a lattice basis.
struct DivClass {
    std::vector<i64> coords;

    DivClass() = default;
    explicit DivClass(std::vector<i64> c) : coords(std::move(c)) {}
    DivClass(std::initializer_list<i64> c) : coords(c) {}

    static DivClass zero(std::size_t rank) { return DivClass(std::vector<i64>(rank, 0)); }
    static DivClass basis(std::size_t rank, std::size_t i);

    std::size_t size() const noexcept { return coords.size(); }
    bool is_zero() const noexcept;

    friend bool operator==(const DivClass&, const DivClass&) = default;
    friend auto operator<=>(const DivClass&, const DivClass&) = default;
};

DivClass operator+(const DivClass& a, const DivClass& b);
DivClass operator-(const DivClass& a, const DivClass& b);
DivClass operator-(const DivClass& a);
DivClass operator*(i64 k, const DivClass& a);

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

struct Signature {
    int positive = 0;
    int negative = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

// An integral symmetric bilinear form with labelled basis and a distinguished
// ample class. Immutable once constructed.
class Lattice {
public:
    // Validates the form; with `k3` set, additionally requires an even diagonal
    // and signature (1, rank-1).
    Lattice(IntMatrix gram, std::vector<std::string> labels, DivClass ample, bool k3);

    std::size_t rank() const noexcept { return gram_.size(); }
    const IntMatrix& gram() const noexcept { return gram_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const DivClass& ample() const noexcept { return ample_; }
    bool k3() const noexcept { return k3_; }

    // Basis vector with the given label; throws ParseError if absent.
    DivClass basis_class(std::string_view label) const;

    friend bool operator==(const Lattice&, const Lattice&) = default;

private:
    IntMatrix gram_;
    std::vector<std::string> labels_;
    DivClass ample_;
    bool k3_;
};

i64 pair(const Lattice& L, const DivClass& a, const DivClass& b);
i64 self_int(const Lattice& L, const DivClass& d);

// Intersection with the ample class.
i64 degree(const Lattice& L, const DivClass& d);

// Exact inertia of a symmetric integer matrix (congruence diagonalization over Q).
Inertia inertia(const IntMatrix& symmetric);

// Throws DegenerateForm when the gram matrix is singular.
Signature signature(const Lattice& L);
Signature signature(const IntMatrix& gram);

// D1^2 D2^2 <= (D1.D2)^2; both squares must be positive.
bool hodge_check(const Lattice& L, const DivClass& d1, const DivClass& d2);

bool is_even(const Lattice& L);

using NamedClasses = std::map<std::string, DivClass, std::less<>>;

// Parses an integer combination such as "2h+2B", "-h - B", "f+f5-2*h" or "0".
// Names resolve against `extra` first, then against basis labels.
DivClass parse_class(const Lattice& L, std::string_view text, const NamedClasses& extra = {});

// Renders a class in basis labels, e.g. "2h+2B", "0".
std::string format_class(const Lattice& L, const DivClass& d);

// Coordinate list "a,b,c" in label order.
DivClass parse_coords(const Lattice& L, std::string_view text);

// The same form in a new basis (columns given as classes of L). The new basis
// must be unimodular. Classes map old -> new with `to_new`.
struct BasisChange {
    Lattice lattice;
    IntMatrix old_to_new;  // row i: new coordinates of old basis vector i

    DivClass to_new(const DivClass& old_class) const;
};

BasisChange change_basis(const Lattice& L, const std::vector<DivClass>& new_basis,
                         std::vector<std::string> new_labels);

}  // namespace k3acm
