#include "doctest.h"

#include <random>

#include "k3acm/casework.hpp"
#include "k3acm/error.hpp"
#include "k3acm/lattice.hpp"
#include "oracles.hpp"

using namespace k3acm;

namespace {

Errc code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::ParseError;
}

std::vector<Lattice> sample_lattices()
{
    return {quartic_lattice(-2, 1), quartic_lattice(-2, 2), quartic_lattice(-2, 3),
            quartic_lattice(0, 3),  quartic_lattice(0, 4),  quartic_lattice(2, 5),
            quartic_lattice(4, 6),  delpezzo_cover_lattice()};
}

}  // namespace

TEST_CASE("construction validates the form")
{
    const std::vector<std::string> hb{"h", "B"};
    CHECK(code_of([&] { Lattice({{4, 1}, {2, -2}}, hb, {1, 0}, true); }) == Errc::NonSymmetric);
    CHECK(code_of([&] { Lattice({{4, 1}, {1}}, hb, {1, 0}, true); }) == Errc::BadDimensions);
    CHECK(code_of([&] { Lattice({{4, 1}, {1, -2}}, {"h"}, {1, 0}, true); }) == Errc::BadDimensions);
    CHECK(code_of([&] { Lattice({{4, 1}, {1, -2}}, {"h", "h"}, {1, 0}, true); }) ==
          Errc::DuplicateLabels);
    CHECK(code_of([&] { Lattice({{4, 1}, {1, -3}}, hb, {1, 0}, true); }) == Errc::OddK3Diagonal);
    CHECK(code_of([&] { Lattice({{4, 0}, {0, 2}}, hb, {1, 0}, true); }) == Errc::WrongSignature);
    CHECK(code_of([&] { Lattice({{4, 1}, {1, -2}}, hb, {0, 1}, true); }) == Errc::NonPositiveAmple);
    CHECK(code_of([&] { Lattice({{4, 1}, {1, -2}}, hb, {1}, true); }) == Errc::BadDimensions);

    const Lattice rank1({{2}}, {"H"}, {1}, true);
    CHECK(signature(rank1) == Signature{1, 0});
    // without the k3 flag odd diagonals and other signatures are allowed
    CHECK_NOTHROW(Lattice({{4, 0}, {0, 3}}, hb, {1, 0}, false));
}

TEST_CASE("intersection numbers on the quartic lattices")
{
    const Lattice L3 = quartic_lattice(-2, 3);
    CHECK(pair(L3, parse_class(L3, "4h-2B"), parse_class(L3, "h")) == 10);
    const Lattice L2 = quartic_lattice(-2, 2);
    CHECK(self_int(L2, parse_class(L2, "2h+2B")) == 24);
    for (const auto& L : sample_lattices()) {
        CHECK(self_int(L, L.ample()) == 4);
        CHECK(pair(L, DivClass::zero(L.rank()), L.ample()) == 0);
    }
    CHECK(signature(quartic_lattice(-2, 1)) == Signature{1, 1});
    CHECK(code_of([&] { pair(L3, DivClass{1, 0, 0}, DivClass{1, 0}); }) == Errc::DimensionMismatch);
}

TEST_CASE("del Pezzo double cover lattice")
{
    const Lattice L = delpezzo_cover_lattice();
    CHECK(L.rank() == 8);
    CHECK(is_even(L));
    CHECK(signature(L) == Signature{1, 7});
    NamedClasses named{{"f", parse_class(L, "2l-e1-e2-e3-e4")}, {"h", L.ample()}};
    for (const char* fj : {"l-e5", "l-e6", "l-e7"}) {
        named["fj"] = parse_class(L, fj);
        CHECK(pair(L, named["f"], named["fj"]) == 4);
        CHECK(self_int(L, parse_class(L, "f-fj", named)) == -8);
        CHECK(self_int(L, parse_class(L, "f+fj-2h", named)) == -8);
    }
}

TEST_CASE("hodge_check preconditions")
{
    const Lattice L = quartic_lattice(4, 6);
    CHECK(hodge_check(L, DivClass{0, 2}, DivClass{0, 1}));
    CHECK(code_of([&] { hodge_check(L, DivClass{1, 0}, DivClass{-1, 1}); }) ==
          Errc::PreconditionViolated);
}

TEST_CASE("signature of singular forms")
{
    CHECK(code_of([] { signature(IntMatrix{{2, 2}, {2, 2}}); }) == Errc::DegenerateForm);
    CHECK(inertia({{2, 2}, {2, 2}}) == Inertia{1, 0, 1});
}

TEST_CASE("pairing is bilinear, symmetric and even")
{
    std::mt19937_64 rng(20240601);
    for (const auto& L : sample_lattices()) {
        const std::size_t n = L.rank();
        for (int i = 0; i < 1000; ++i) {
            const DivClass a(oracle::random_vector(rng, n, -50, 50));
            const DivClass b(oracle::random_vector(rng, n, -50, 50));
            const DivClass c(oracle::random_vector(rng, n, -50, 50));
            const i64 k = oracle::random_vector(rng, 1, -9, 9)[0];
            REQUIRE(pair(L, a, b) == oracle::dot(L.gram(), a.coords, b.coords));
            REQUIRE(pair(L, a, b) == pair(L, b, a));
            REQUIRE(pair(L, a + b, c) == pair(L, a, c) + pair(L, b, c));
            REQUIRE(pair(L, k * a, c) == k * pair(L, a, c));
            REQUIRE(self_int(L, a) % 2 == 0);
        }
    }
}

TEST_CASE("Hodge index on random positive pairs in the del Pezzo cover lattice")
{
    std::mt19937_64 rng(7);
    const Lattice L = delpezzo_cover_lattice();
    int tested = 0;
    while (tested < 1000) {
        auto v = oracle::random_vector(rng, 8, -3, 3);
        auto w = oracle::random_vector(rng, 8, -3, 3);
        v[0] = oracle::random_vector(rng, 1, 4, 12)[0];
        w[0] = oracle::random_vector(rng, 1, -12, -4)[0];
        const DivClass a(v), b(w);
        if (self_int(L, a) <= 0 || self_int(L, b) <= 0)
            continue;
        const __int128 lhs = static_cast<__int128>(self_int(L, a)) * self_int(L, b);
        const __int128 ab = pair(L, a, b);
        REQUIRE(hodge_check(L, a, b));
        REQUIRE(lhs <= ab * ab);
        ++tested;
    }
}

TEST_CASE("signature agrees with a floating-point eigenvalue oracle")
{
    for (const auto& L : sample_lattices()) {
        const auto [p, q] = oracle::signature(L.gram());
        CHECK(signature(L) == Signature{p, q});
    }
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 2 + i % 4;
        IntMatrix g(n, std::vector<i64>(n));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r; c < n; ++c)
                g[r][c] = g[c][r] = oracle::random_vector(rng, 1, -6, 6)[0];
        const Inertia in = inertia(g);
        if (in.zero != 0)
            continue;
        const auto [p, q] = oracle::signature(g);
        REQUIRE(in.positive == p);
        REQUIRE(in.negative == q);
    }
}

TEST_CASE("signature is invariant under unimodular change of basis")
{
    std::mt19937_64 rng(3);
    for (const auto& L : sample_lattices()) {
        const std::size_t n = L.rank();
        for (int trial = 0; trial < 50; ++trial) {
            // product of elementary column operations
            std::vector<DivClass> basis;
            for (std::size_t i = 0; i < n; ++i)
                basis.push_back(DivClass::basis(n, i));
            for (int step = 0; step < 6; ++step) {
                const auto ij = oracle::random_vector(rng, 2, 0, static_cast<i64>(n) - 1);
                if (ij[0] == ij[1])
                    continue;
                const i64 k = oracle::random_vector(rng, 1, -2, 2)[0];
                basis[ij[0]] = basis[ij[0]] + k * basis[ij[1]];
            }
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < n; ++i)
                labels.push_back("x" + std::to_string(i));
            const BasisChange bc = change_basis(L, basis, labels);
            REQUIRE(signature(bc.lattice) == signature(L));
            REQUIRE(is_even(bc.lattice) == is_even(L));
            const DivClass a(oracle::random_vector(rng, n, -5, 5));
            const DivClass b(oracle::random_vector(rng, n, -5, 5));
            REQUIRE(pair(bc.lattice, bc.to_new(a), bc.to_new(b)) == pair(L, a, b));
        }
    }
    const Lattice L = quartic_lattice(-2, 1);
    CHECK(code_of([&] { change_basis(L, {DivClass{2, 0}, DivClass{0, 1}}, {"a", "b"}); }) ==
          Errc::PreconditionViolated);
}

TEST_CASE("class text parses and formats")
{
    const Lattice L = quartic_lattice(0, 4);
    CHECK(parse_class(L, "2h - 3*B") == DivClass{2, -3});
    CHECK(parse_class(L, "-h-B") == DivClass{-1, -1});
    CHECK(parse_class(L, "0") == DivClass{0, 0});
    CHECK(format_class(L, DivClass{1, 2}) == "h+2B");
    CHECK(format_class(L, DivClass{0, -1}) == "-B");
    CHECK(parse_coords(L, "3,-2") == DivClass{3, -2});
    CHECK(code_of([&] { parse_class(L, "h+Q"); }) == Errc::ParseError);
    CHECK(code_of([&] { parse_coords(L, "1,2,3"); }) == Errc::DimensionMismatch);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const DivClass d(oracle::random_vector(rng, 2, -20, 20));
        REQUIRE(parse_class(L, format_class(L, d)) == d);
    }
}
