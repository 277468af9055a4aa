#include "doctest.h"

#include "k3acm/casework.hpp"
#include "k3acm/destabilize.hpp"
#include "k3acm/error.hpp"

using namespace k3acm;

namespace {

Assumptions emptiness()
{
    return {{DivClass{-1, 1}, AssumptionKind::Empty, "|B-h| empty"},
            {DivClass{2, -1}, AssumptionKind::Empty, "|2h-B| empty"}};
}

struct Run {
    const char* name;
    i64 b2, hb;
    const char* c;
    i64 d;
    PairMode mode;
};

const Run kCases[] = {
    {"C", -2, 3, "4h-2B", 2, PairMode::GonalPencil},
    {"D", 0, 4, "h+2B", 6, PairMode::NotSimple},
    {"D mirror", 0, 4, "5h-2B", 6, PairMode::NotSimple},
    {"E", 4, 6, "2B", 4, PairMode::GonalPencil},
    {"E mirror", 4, 6, "6h-2B", 4, PairMode::GonalPencil},
    {"gonality of |2B|", 4, 6, "2B", 4, PairMode::GonalityBelow},
};

std::vector<PairElimination> run(const Run& r)
{
    const Lattice L = quartic_lattice(r.b2, r.hb);
    return enumerate_destabilizing(L, parse_class(L, r.c), r.d, r.b2 == 4 ? emptiness() : Assumptions{},
                                   r.mode);
}

}  // namespace

TEST_CASE("no branch is left unresolved in the replayed cases")
{
    for (const auto& r : kCases) {
        INFO(r.name);
        const auto records = run(r);
        CHECK_FALSE(records.empty());
        CHECK(unresolved_count(records) == 0);
        for (const auto& rec : records) {
            CHECK_FALSE(rec.unresolved());
            for (const auto& claim : rec.trace)
                CHECK(claim.verified());
            for (const auto& cand : rec.candidates) {
                CHECK(cand.eliminated());
                CHECK(cand.m_n == cand.c_n - cand.n_sq);
                CHECK(cand.m_sq >= cand.n_sq);
                CHECK(cand.len_zprime >= 0);
            }
        }
        CHECK(records.back().aggregate);
    }
}

TEST_CASE("case C: square-zero N has M.N >= 4 > 2")
{
    const auto records = run(kCases[0]);
    REQUIRE(records.front().n_square == 0);
    CHECK(records.front().outcome == "degree-bound");
}

TEST_CASE("case D: N^2 = 4 forces (B.N, h.N) = (2, 5)")
{
    const auto records = run(kCases[1]);
    const PairElimination* four = nullptr;
    for (const auto& r : records)
        if (r.n_square == 4 && !r.aggregate)
            four = &r;
    REQUIRE(four != nullptr);
    bool found = false;
    for (const auto& c : four->candidates)
        if (c.pairing == std::vector<i64>{5, 2}) {
            found = true;
            CHECK(c.c_n == 9);
            CHECK(c.rule == "square0-low-degree");
        }
    CHECK(found);
}

TEST_CASE("gonality of |2B|: every branch is degree-bound")
{
    for (const auto& r : run(kCases[5]))
        if (!r.aggregate)
            CHECK((r.outcome == "degree-bound" || r.outcome == "empty-region"));
}

TEST_CASE("without the emptiness facts case E stays open and says why")
{
    const Lattice L = quartic_lattice(4, 6);
    const auto records =
        enumerate_destabilizing(L, parse_class(L, "2B"), 4, {}, PairMode::GonalPencil);
    CHECK(unresolved_count(records) > 0);
    bool names_fact = false;
    for (const auto& r : records)
        for (const auto& m : r.missing)
            names_fact = names_fact || m.find("2h-B") != std::string::npos;
    CHECK(names_fact);
}

TEST_CASE("preconditions")
{
    const Lattice L = quartic_lattice(-2, 3);
    auto code = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::ParseError;
    };
    CHECK(code([&] { enumerate_destabilizing(L, DivClass{0, 1}, 2, {}); }) ==
          Errc::PreconditionViolated);
    CHECK(code([&] { enumerate_destabilizing(L, DivClass{4, -2}, 0, {}); }) ==
          Errc::PreconditionViolated);
    CHECK(code([&] {
              enumerate_destabilizing(delpezzo_cover_lattice(), DivClass::basis(8, 0), 2, {});
          }) == Errc::UnsupportedRank);
    CHECK(pair_mode_from_string("gonal") == PairMode::GonalPencil);
    CHECK_THROWS_AS(pair_mode_from_string("sideways"), Error);
}
