#include "k3acm/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <set>
#include <sstream>

#include "k3acm/checked.hpp"
#include "k3acm/error.hpp"

namespace k3acm {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using RMatrix = std::vector<std::vector<Rational>>;

void require_rank(const Lattice& L, const DivClass& d)
{
    if (d.size() != L.rank())
        throw Error(Errc::DimensionMismatch, "class has " + std::to_string(d.size()) +
                                                 " coordinates, lattice rank is " +
                                                 std::to_string(L.rank()));
}

void require_same_size(const DivClass& a, const DivClass& b)
{
    if (a.size() != b.size())
        throw Error(Errc::DimensionMismatch, "classes of different length");
}

RMatrix to_rational(const IntMatrix& m)
{
    RMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (i64 v : m[i])
            r[i].emplace_back(v);
    return r;
}

}  // namespace

DivClass DivClass::basis(std::size_t rank, std::size_t i)
{
    DivClass d = zero(rank);
    d.coords.at(i) = 1;
    return d;
}

bool DivClass::is_zero() const noexcept
{
    for (i64 c : coords)
        if (c != 0)
            return false;
    return true;
}

DivClass operator+(const DivClass& a, const DivClass& b)
{
    require_same_size(a, b);
    DivClass r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r.coords[i] = checked::add(r.coords[i], b.coords[i]);
    return r;
}

DivClass operator-(const DivClass& a, const DivClass& b)
{
    require_same_size(a, b);
    DivClass r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r.coords[i] = checked::sub(r.coords[i], b.coords[i]);
    return r;
}

DivClass operator-(const DivClass& a)
{
    DivClass r = a;
    for (i64& c : r.coords)
        c = checked::neg(c);
    return r;
}

DivClass operator*(i64 k, const DivClass& a)
{
    DivClass r = a;
    for (i64& c : r.coords)
        c = checked::mul(k, c);
    return r;
}

Lattice::Lattice(IntMatrix gram, std::vector<std::string> labels, DivClass ample, bool k3)
    : gram_(std::move(gram)), labels_(std::move(labels)), ample_(std::move(ample)), k3_(k3)
{
    const std::size_t n = gram_.size();
    if (n == 0)
        throw Error(Errc::BadDimensions, "empty gram matrix");
    for (const auto& row : gram_)
        if (row.size() != n)
            throw Error(Errc::BadDimensions, "gram matrix is not square");
    if (labels_.size() != n)
        throw Error(Errc::BadDimensions, "expected " + std::to_string(n) + " labels, got " +
                                             std::to_string(labels_.size()));
    if (ample_.size() != n)
        throw Error(Errc::BadDimensions, "ample class has wrong length");
    std::set<std::string, std::less<>> seen;
    for (const auto& l : labels_) {
        if (l.empty())
            throw Error(Errc::DuplicateLabels, "empty basis label");
        if (!seen.insert(l).second)
            throw Error(Errc::DuplicateLabels, "label '" + l + "' repeated");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw Error(Errc::NonSymmetric, "gram[" + std::to_string(i) + "][" +
                                                    std::to_string(j) + "] != gram[" +
                                                    std::to_string(j) + "][" +
                                                    std::to_string(i) + "]");
    if (self_int(*this, ample_) <= 0)
        throw Error(Errc::NonPositiveAmple, "ample class has self-intersection " +
                                                std::to_string(self_int(*this, ample_)));
    if (k3_) {
        for (std::size_t i = 0; i < n; ++i)
            if (gram_[i][i] % 2 != 0)
                throw Error(Errc::OddK3Diagonal, "diagonal entry " + std::to_string(i) + " is " +
                                                     std::to_string(gram_[i][i]));
        Inertia in = inertia(gram_);
        if (in.zero != 0 || in.positive != 1)
            throw Error(Errc::WrongSignature,
                        "inertia (" + std::to_string(in.positive) + "," +
                            std::to_string(in.negative) + "," + std::to_string(in.zero) +
                            "), expected (1," + std::to_string(n - 1) + ",0)");
    }
}

DivClass Lattice::basis_class(std::string_view label) const
{
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label)
            return DivClass::basis(rank(), i);
    throw Error(Errc::ParseError, "unknown basis label '" + std::string(label) + "'");
}

i64 pair(const Lattice& L, const DivClass& a, const DivClass& b)
{
    require_rank(L, a);
    require_rank(L, b);
    const auto& g = L.gram();
    i64 total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.coords[i] == 0)
            continue;
        i64 row = 0;
        for (std::size_t j = 0; j < b.size(); ++j)
            row = checked::add(row, checked::mul(g[i][j], b.coords[j]));
        total = checked::add(total, checked::mul(a.coords[i], row));
    }
    return total;
}

i64 self_int(const Lattice& L, const DivClass& d) { return pair(L, d, d); }

i64 degree(const Lattice& L, const DivClass& d) { return pair(L, L.ample(), d); }

Inertia inertia(const IntMatrix& symmetric)
{
    RMatrix a = to_rational(symmetric);
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < a.size(); ++i)
        live.push_back(i);

    Inertia result;
    auto count = [&result](const Rational& v) {
        if (v > 0)
            ++result.positive;
        else
            ++result.negative;
    };
    auto drop = [&live](std::size_t idx) { std::erase(live, idx); };

    while (!live.empty()) {
        std::size_t pivot = a.size();
        for (std::size_t i : live)
            if (a[i][i] != 0) {
                pivot = i;
                break;
            }
        if (pivot != a.size()) {
            const Rational p = a[pivot][pivot];
            count(p);
            drop(pivot);
            for (std::size_t i : live) {
                if (a[i][pivot] == 0)
                    continue;
                const Rational f = a[i][pivot] / p;
                for (std::size_t j : live)
                    a[i][j] -= f * a[pivot][j];
            }
            continue;
        }
        // Zero diagonal: look for a hyperbolic 2x2 block [[0,c],[c,0]].
        std::size_t bi = a.size(), bj = a.size();
        for (std::size_t i : live) {
            for (std::size_t j : live)
                if (i != j && a[i][j] != 0) {
                    bi = i;
                    bj = j;
                    break;
                }
            if (bi != a.size())
                break;
        }
        if (bi == a.size()) {
            result.zero += static_cast<int>(live.size());
            break;
        }
        // The block has one positive and one negative direction.
        ++result.positive;
        ++result.negative;
        const Rational c = a[bi][bj];
        drop(bi);
        drop(bj);
        // Schur complement: A_rr - A_rb * inv(block) * A_br, inv(block) = [[0,1/c],[1/c,0]].
        RMatrix next = a;
        for (std::size_t i : live)
            for (std::size_t j : live)
                next[i][j] = a[i][j] - (a[i][bi] * a[bj][j] + a[i][bj] * a[bi][j]) / c;
        a = std::move(next);
    }
    return result;
}

Signature signature(const IntMatrix& gram)
{
    Inertia in = inertia(gram);
    if (in.zero != 0)
        throw Error(Errc::DegenerateForm, "gram matrix is singular");
    return {in.positive, in.negative};
}

Signature signature(const Lattice& L) { return signature(L.gram()); }

bool hodge_check(const Lattice& L, const DivClass& d1, const DivClass& d2)
{
    const i64 s1 = self_int(L, d1);
    const i64 s2 = self_int(L, d2);
    if (s1 <= 0 || s2 <= 0)
        throw Error(Errc::PreconditionViolated, "hodge_check needs positive squares, got " +
                                                    std::to_string(s1) + " and " +
                                                    std::to_string(s2));
    const i64 p = pair(L, d1, d2);
    return checked::mul(s1, s2) <= checked::mul(p, p);
}

bool is_even(const Lattice& L)
{
    for (std::size_t i = 0; i < L.rank(); ++i)
        if (L.gram()[i][i] % 2 != 0)
            return false;
    return true;
}

DivClass parse_class(const Lattice& L, std::string_view text, const NamedClasses& extra)
{
    DivClass total = DivClass::zero(L.rank());
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto fail = [&](const std::string& why) -> Error {
        return Error(Errc::ParseError, "class expression '" + std::string(text) + "': " + why);
    };

    skip_ws();
    if (pos == text.size())
        throw fail("empty");
    bool first = true;
    while (true) {
        skip_ws();
        if (pos == text.size())
            break;
        i64 sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw fail("expected '+' or '-' at offset " + std::to_string(pos));
        }
        first = false;

        bool have_coef = false;
        i64 coef = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coef = checked::add(checked::mul(coef, 10), text[pos] - '0');
            have_coef = true;
            ++pos;
        }
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            if (!have_coef)
                throw fail("'*' without coefficient");
            ++pos;
            skip_ws();
        }
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_' || text[pos] == '\''))
            ++pos;
        std::string_view name = text.substr(start, pos - start);
        if (!name.empty() && std::isdigit(static_cast<unsigned char>(name.front())))
            throw fail("name may not start with a digit");
        if (name.empty()) {
            if (!have_coef)
                throw fail("expected a term at offset " + std::to_string(start));
            if (coef != 0)
                throw fail("bare integer terms other than 0 are not classes");
            continue;
        }
        DivClass term;
        if (auto it = extra.find(name); it != extra.end())
            term = it->second;
        else
            term = L.basis_class(name);
        if (term.size() != L.rank())
            throw Error(Errc::DimensionMismatch, "named class '" + std::string(name) +
                                                     "' has wrong length");
        total = total + checked::mul(sign, have_coef ? coef : 1) * term;
    }
    return total;
}

std::string format_class(const Lattice& L, const DivClass& d)
{
    require_rank(L, d);
    std::ostringstream out;
    bool any = false;
    for (std::size_t i = 0; i < d.size(); ++i) {
        i64 c = d.coords[i];
        if (c == 0)
            continue;
        if (c < 0)
            out << '-';
        else if (any)
            out << '+';
        i64 mag = c < 0 ? checked::neg(c) : c;
        if (mag != 1)
            out << mag;
        out << L.labels()[i];
        any = true;
    }
    if (!any)
        out << '0';
    return out.str();
}

DivClass parse_coords(const Lattice& L, std::string_view text)
{
    std::vector<i64> coords;
    std::string item;
    std::string s(text);
    std::stringstream ss(s);
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw Error(Errc::ParseError, "bad coordinate '" + item + "'");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
            ++used;
        if (used != item.size())
            throw Error(Errc::ParseError, "bad coordinate '" + item + "'");
        coords.push_back(v);
    }
    if (coords.size() != L.rank())
        throw Error(Errc::DimensionMismatch, "expected " + std::to_string(L.rank()) +
                                                 " coordinates, got " +
                                                 std::to_string(coords.size()));
    return DivClass(std::move(coords));
}

namespace {

DivClass apply_rows(const IntMatrix& old_to_new, const DivClass& old_class)
{
    if (old_class.size() != old_to_new.size())
        throw Error(Errc::DimensionMismatch, "class length does not match basis change");
    DivClass r = DivClass::zero(old_to_new.size());
    for (std::size_t i = 0; i < old_class.size(); ++i)
        r = r + old_class.coords[i] * DivClass(old_to_new[i]);
    return r;
}

}  // namespace

DivClass BasisChange::to_new(const DivClass& old_class) const
{
    return apply_rows(old_to_new, old_class);
}

BasisChange change_basis(const Lattice& L, const std::vector<DivClass>& new_basis,
                         std::vector<std::string> new_labels)
{
    const std::size_t n = L.rank();
    if (new_basis.size() != n)
        throw Error(Errc::BadDimensions, "basis change needs " + std::to_string(n) + " vectors");
    for (const auto& v : new_basis)
        require_rank(L, v);

    // Invert the column matrix P (P[:,k] = new_basis[k]) over Q and require integrality.
    RMatrix aug(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k)
            aug[i][k] = new_basis[k].coords[i];
        aug[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && aug[piv][col] == 0)
            ++piv;
        if (piv == n)
            throw Error(Errc::PreconditionViolated, "new basis is linearly dependent");
        std::swap(aug[piv], aug[col]);
        const Rational p = aug[col][col];
        for (auto& v : aug[col])
            v /= p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || aug[r][col] == 0)
                continue;
            const Rational f = aug[r][col];
            for (std::size_t k = 0; k < 2 * n; ++k)
                aug[r][k] -= f * aug[col][k];
        }
    }
    // P^{-1}[k][i] = new coordinate k of old basis vector i.
    IntMatrix old_to_new(n, std::vector<i64>(n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            const Rational& v = aug[k][n + i];
            if (denominator(v) != 1)
                throw Error(Errc::PreconditionViolated, "new basis is not unimodular");
            old_to_new[i][k] = static_cast<i64>(numerator(v));
        }

    IntMatrix gram(n, std::vector<i64>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            gram[a][b] = pair(L, new_basis[a], new_basis[b]);

    DivClass ample_new = apply_rows(old_to_new, L.ample());
    return BasisChange{Lattice(std::move(gram), std::move(new_labels), std::move(ample_new), L.k3()),
                       std::move(old_to_new)};
}

}  // namespace k3acm
