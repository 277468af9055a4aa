#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>

#include "k3acm/casework.hpp"
#include "k3acm/error.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace k3acm;

namespace {

const std::map<std::string, std::vector<Point>>& expected()
{
    static const std::map<std::string, std::vector<Point>> m{
        {"i-a", {{3, -2}}},
        {"i-b", {{2, 2}, {4, -2}}},
        {"i-c", {{4, -2}}},
        {"ii", {{1, 2}, {5, -2}}},
        {"iii", {{0, 2}, {6, -2}}},
    };
    return m;
}

bool has_text(const CaseSpec& spec, const std::string& text)
{
    for (const auto& c : spec.constraints)
        if (describe(spec, c).find(text) != std::string::npos)
            return true;
    return false;
}

}  // namespace

TEST_CASE("five case lists")
{
    const auto presets = lemma51_presets();
    REQUIRE(presets.size() == 5);
    for (const auto& p : presets) {
        INFO(p.tag);
        CHECK(enumerate_case(p) == expected().at(p.tag));
    }
}

TEST_CASE("preset constraint text")
{
    const auto presets = lemma51_presets();
    auto find = [&](const std::string& tag) {
        return *std::find_if(presets.begin(), presets.end(),
                             [&](const CaseSpec& s) { return s.tag == tag; });
    };
    CHECK(has_text(find("i-a"), "C.(h-B) = 3s+3t >= 1"));
    CHECK(has_text(find("i-a"), "C.(h) = 4s+t <= 12"));
    CHECK(has_text(find("i-b"), "C.(B) = 2s-2t >= 0"));
    CHECK(has_text(find("i-c"), "C.(2h-B) = 5s+8t >= 3"));
    CHECK(has_text(find("i-c"), "C.(B) = 3s-2t >= 0"));
    CHECK(has_text(find("ii"), "C.(B) = 4s >= 1"));
    CHECK(has_text(find("ii"), "C.(h) = 4s+4t <= 12"));
    CHECK(has_text(find("iii"), "C.(B) = 6s+4t >= 4"));
    CHECK(has_text(find("iii"), "C.(h) = 4s+6t <= 12"));
    for (const auto& p : presets)
        for (const auto& c : p.constraints)
            CHECK_FALSE(c.why.rule.empty());
}

TEST_CASE("output does not depend on the box")
{
    for (const auto& p : lemma51_presets())
        for (i64 box : {16, 32, 64, 100}) {
            CaseSpec q = p;
            q.box = box;
            REQUIRE(enumerate_case(q) == expected().at(p.tag));
        }
}

TEST_CASE("presets agree with the brute-force oracle")
{
    for (const auto& p : lemma51_presets()) {
        const auto brute = oracle::enumerate(p);
        CHECK_FALSE(brute.touches_boundary);
        CHECK(enumerate_case(p) == brute.points);
        const CaseSpec open = without_abs_t(p);
        CHECK(enumerate_case(open) == oracle::enumerate(open).points);
    }
}

TEST_CASE("random case specs agree with the brute-force oracle")
{
    std::mt19937_64 rng(2024);
    int nonempty = 0;
    for (int i = 0; i < 100; ++i) {
        const CaseSpec spec = gen::random_spec(rng);
        const auto brute = oracle::enumerate(spec);
        if (brute.touches_boundary) {
            try {
                enumerate_case(spec);
                FAIL("expected BoxTooSmall");
            } catch (const Error& e) {
                CHECK(e.code() == Errc::BoxTooSmall);
            }
            continue;
        }
        nonempty += !brute.points.empty();
        REQUIRE(enumerate_case(spec) == brute.points);
    }
    CHECK(nonempty >= 30);
}

TEST_CASE("dropping |t| >= 2 gives a superset")
{
    const auto presets = lemma51_presets();
    const CaseSpec ib = presets[1];
    const auto all = enumerate_case(without_abs_t(ib));
    for (const auto& p : expected().at("i-b"))
        CHECK(std::find(all.begin(), all.end(), p) != all.end());
    const std::vector<Point> want{{1, 0}, {1, 1}, {2, -1}, {2, 0}, {2, 1},
                                  {2, 2}, {3, -1}, {3, 0}, {4, -2}};
    CHECK(all == want);
}

TEST_CASE("box errors")
{
    CaseSpec p = lemma51_presets()[0];
    p.box = 8;
    CHECK_THROWS_AS(enumerate_case(p), Error);
    CaseSpec open{"open", quartic_lattice(-2, 1), {}, 16};
    open.constraints.push_back({ConstraintKind::LinearIneq, DivClass{1, 0}, Rel::Ge, 0, 0, 0, {}});
    try {
        enumerate_case(open);
        FAIL("expected BoxTooSmall");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BoxTooSmall);
    }
}

TEST_CASE("preset lookup")
{
    CHECK(preset_tag_for(-2, 1) == "i-a");
    CHECK(preset_tag_for(-2, 2) == "i-b");
    CHECK(preset_tag_for(-2, 3) == "i-c");
    CHECK(preset_tag_for(0, 4) == "ii");
    CHECK(preset_tag_for(4, 6) == "iii");
    CHECK(preset_tag_for(0, 3).empty());
    CHECK(case_class(lemma51_presets()[0], 3, -2) == DivClass{3, -2});
}
