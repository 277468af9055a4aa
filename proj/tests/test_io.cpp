#include "doctest.h"

#include <filesystem>

#include "k3acm/builtin.hpp"
#include "k3acm/error.hpp"
#include "k3acm/io.hpp"

using namespace k3acm;
namespace fs = std::filesystem;

namespace {

std::vector<fs::path> shipped_configs()
{
    std::vector<fs::path> out;
    for (const auto& e : fs::directory_iterator(fs::path(K3ACM_SOURCE_DIR) / "configs"))
        if (e.path().extension() == ".json")
            out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

Errc parse_code(const std::string& text)
{
    try {
        parse_config(text);
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::Overflow;  // sentinel: parsed fine
}

const char* kQuartic =
    R"({"rank":2,"gram":[[4,1],[1,-2]],"labels":["h","B"],"ample":[1,0],"k3":true})";

}  // namespace

TEST_CASE("shipped configs load, dump and reload identically")
{
    const auto paths = shipped_configs();
    CHECK(paths.size() == 9);
    for (const auto& p : paths) {
        INFO(p.string());
        const LatticeConfig cfg = load_config(p.string());
        CHECK(parse_config(dump_config(cfg)) == cfg);
    }
    const LatticeConfig d = load_config((fs::path(K3ACM_SOURCE_DIR) / "configs/delpezzo_cover.json").string());
    CHECK(d.lattice.rank() == 8);
    CHECK(is_even(d.lattice));
    CHECK(signature(d.lattice) == Signature{1, 7});
    const LatticeConfig q = load_config((fs::path(K3ACM_SOURCE_DIR) / "configs/quartic_b2_4.json").string());
    CHECK(q.lattice.gram() == IntMatrix{{4, 6}, {6, 4}});
    CHECK(signature(q.lattice) == Signature{1, 1});
    CHECK(q.assumptions.size() == 2);
}

TEST_CASE("config parsing is strict")
{
    CHECK(parse_code(kQuartic) == Errc::Overflow);
    CHECK(parse_code(R"({"rank":2,"gram":[[4,1],[1,-2]],"labels":["h","B"],"ample":[1,0],"k3":true,"x":0})") ==
          Errc::ParseError);
    CHECK(parse_code(R"({"rank":2,"gram":[[4,1],[1,-2]],"labels":["h","B"],"ample":[1,0]})") ==
          Errc::ParseError);
    CHECK(parse_code(R"({"rank":"2","gram":[[4,1],[1,-2]],"labels":["h","B"],"ample":[1,0],"k3":true})") ==
          Errc::ParseError);
    CHECK(parse_code(R"({"rank":3,"gram":[[4,1],[1,-2]],"labels":["h","B"],"ample":[1,0],"k3":true})") ==
          Errc::BadDimensions);
    CHECK(parse_code(R"({"rank":2,"gram":[[4,1],[1,-2]],"labels":["h","B"],"ample":[1,0],"k3":true,
        "assumptions":[{"subject":[1,0,0],"kind":"Empty"}]})") == Errc::DimensionMismatch);
    CHECK(parse_code(R"({"rank":2,"gram":[[4,1],[1,-2]],"labels":["h","B"],"ample":[1,0],"k3":true,
        "assumptions":[{"subject":[1,0],"kind":"Hollow"}]})") == Errc::ParseError);
    CHECK(parse_code(R"({"rank":2,"gram":[[4,1],[1,-2]],"labels":["h","B"],"ample":[1,0],"k3":true,
        "assumptions":[{"subject":[1,0],"kind":"Empty","extra":1}]})") == Errc::ParseError);
    CHECK(parse_code(R"({"rank":2,"gram":[[4,1],[1,-2]],"labels":["h","B"],"ample":[1,0],"k3":true,
        "assumptions":[{"subject":[1,0],"kind":"Empty"}]})") == Errc::ConflictingAssumptions);
    CHECK(parse_code(R"({"rank":2,"gram":[[4,1],[1,-3]],"labels":["h","B"],"ample":[1,0],"k3":true})") ==
          Errc::OddK3Diagonal);
    CHECK(parse_code("[1,2]") == Errc::ParseError);
}

TEST_CASE("syntax errors carry a line number")
{
    try {
        parse_config("{\n  \"rank\": 2,\n  \"gram\": [[4,1],\n");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
    try {
        parse_config(R"({"rank":2,"gram":[[4,1],[1,"x"]],"labels":["h","B"],"ample":[1,0],"k3":true})");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("gram[1][1]") != std::string::npos);
    }
}

TEST_CASE("builtin scripts survive a JSON round trip")
{
    for (const auto& s : builtin_scripts()) {
        INFO(s.tag);
        const Json j = script_to_json(s);
        const DerivationScript back = script_from_json(parse_json(j.dump()));
        CHECK(back == s);
        CHECK(run_script(back) == run_script(s));
    }
}

TEST_CASE("step JSON shapes")
{
    const Json a = step_to_json(ArithmeticClaim{Expr::op("sq", {Expr::cls("B")}), Rel::Le,
                                                Expr::lit(-2), "B^2 = -2", {}, {}, {}});
    CHECK(a.dump() == R"({"kind":"arith","lhs":{"op":"sq","args":[{"class":"B"}]},"rel":"<=","rhs":-2,"cite":"B^2 = -2"})");
    const Json x = step_to_json(AxiomUse{"AX-SERRE", "Serre duality"});
    CHECK(x.dump() == R"({"kind":"axiom","id":"AX-SERRE","cite":"Serre duality"})");
    CHECK_THROWS_AS(step_from_json(parse_json(R"({"kind":"axiom","id":"AX-SERRE","cite":"","x":1})")),
                    Error);
    CHECK_THROWS_AS(step_from_json(parse_json(R"({"kind":"lemma","id":"AX-SERRE","cite":""})")), Error);
    CHECK_THROWS_AS(step_from_json(parse_json(R"({"kind":"arith","lhs":1,"rel":"~","rhs":1,"cite":""})")),
                    Error);
}

TEST_CASE("presets survive a JSON round trip")
{
    for (const auto& p : lemma51_presets()) {
        const CaseSpec back = case_spec_from_json(parse_json(case_spec_to_json(p).dump()));
        CHECK(back == p);
        CHECK(enumerate_case(back) == enumerate_case(p));
    }
}

TEST_CASE("report JSON")
{
    const Json r = report_to_json(run_script(*find_builtin("case-B2neg2-Bh2")));
    CHECK(r["status"] == "Success");
    CHECK(r["final"] == "CONTRADICTION ESTABLISHED");
    CHECK(r["steps"].size() > 10);
    CHECK(r["bindings"]["d"] == 8);
    CHECK(solutions_to_json({{3, -2}}).dump() == R"({"solutions":[[3,-2]]})");
}
