#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "k3acm/cli.hpp"
#include "k3acm/io.hpp"

using namespace k3acm;

namespace {

struct Out {
    int code = -1;
    std::string out;
    std::string err;
};

Out run(std::vector<std::string> args)
{
    std::ostringstream o, e;
    Out r;
    r.code = run_cli(args, o, e);
    r.out = o.str();
    r.err = e.str();
    return r;
}

std::string cfg(const std::string& name)
{
    return std::string(K3ACM_SOURCE_DIR) + "/configs/" + name;
}

std::string temp_file(const std::string& name, const std::string& text)
{
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p.string();
}

bool ends_with_line(const std::string& text, const std::string& line)
{
    return text.size() >= line.size() + 1 &&
           text.compare(text.size() - line.size() - 1, line.size() + 1, line + "\n") == 0;
}

}  // namespace

TEST_CASE("verify a builtin script")
{
    const Out r = run({"verify", "--script", "case-B2neg2-Bh2", "-c", cfg("quartic_b2neg2_bh2.json")});
    CHECK(r.code == 0);
    CHECK(ends_with_line(r.out, "CONTRADICTION ESTABLISHED"));
}

TEST_CASE("enumerate prints the solution list")
{
    const Out r = run({"enumerate", "--preset", "i-a", "-c", cfg("quartic_b2neg2_bh1.json"), "--json"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"solutions\":[[3,-2]]}\n");
    const Out iii = run({"enumerate", "--preset", "iii", "--json", "--box", "64"});
    CHECK(iii.out == "{\"solutions\":[[0,2],[6,-2]]}\n");
}

TEST_CASE("classify outside the table")
{
    const Out r = run({"classify", "-c", cfg("notacm_b2neg2_bh5.json"), "--class", "0,1"});
    CHECK(r.code == 0);
    CHECK(ends_with_line(r.out, "NotAcm"));
    CHECK(run({"classify", "-c", cfg("notacm_b2neg2_bh5.json"), "--class", "0,1", "--expect", "Acm"})
              .code == 1);
}

TEST_CASE("theorem on every shipped quartic config")
{
    for (const char* name : {"quartic_b2neg2_bh1.json", "quartic_b2neg2_bh2.json",
                             "quartic_b2neg2_bh3.json", "quartic_b2_0_bh3.json",
                             "quartic_b2_0_bh4.json", "quartic_b2_2_bh5.json", "quartic_b2_4.json"}) {
        INFO(name);
        const Out r = run({"theorem", "-c", cfg(name)});
        CHECK(r.code == 0);
        CHECK(ends_with_line(r.out, "VERIFIED"));
    }
}

TEST_CASE("verification failures exit 1")
{
    // Ulrich case without the emptiness facts: B is not classified, bad input
    const std::string open = temp_file(
        "k3acm_open.json",
        R"({"rank":2,"gram":[[4,6],[6,4]],"labels":["h","B"],"ample":[1,0],"k3":true})");
    CHECK(run({"theorem", "-c", open}).code == 2);
    CHECK(run({"destabilize", "-c", open, "--class", "0,2", "-d", "4", "--mode", "gonal"}).code == 1);
    // the case-B script replayed on the wrong lattice
    CHECK(run({"verify", "--script", "case-B2neg2-Bh2", "-c", cfg("quartic_b2neg2_bh3.json")}).code ==
          1);
    // a spec whose region reaches the box
    const std::string wide = temp_file(
        "k3acm_wide.json",
        R"({"tag":"wide","lattice":{"rank":2,"gram":[[4,1],[1,-2]],"labels":["h","B"],"ample":[1,0],"k3":true},
            "box":16,"constraints":[{"kind":"LinearIneq","against":[1,0],"rel":">=","bound":0}]})");
    CHECK(run({"enumerate", "--file", wide}).code == 1);
}

TEST_CASE("bad input exits 2")
{
    const std::string truncated = temp_file("k3acm_trunc.json", R"({"rank":2,"gram":[[4,1],)");
    const Out t = run({"lattice-info", "-c", truncated});
    CHECK(t.code == 2);
    CHECK(t.err.find("line") != std::string::npos);
    CHECK(run({"lattice-info", "-c", "/nonexistent/k3acm.json"}).code == 2);
    CHECK(run({"classify", "-c", cfg("quartic_b2neg2_bh1.json"), "--class", "1,2,3"}).code == 2);
    CHECK(run({"classify", "-c", cfg("quartic_b2neg2_bh1.json")}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"verify", "--script", "no-such-script"}).code == 2);
    CHECK(run({"theorem", "-c", cfg("delpezzo_cover.json")}).code == 2);
    const std::string conflict = temp_file(
        "k3acm_conflict.json",
        R"({"rank":2,"gram":[[4,1],[1,-2]],"labels":["h","B"],"ample":[1,0],"k3":true,
            "assumptions":[{"subject":[0,1],"kind":"Empty","note":""},{"subject":[0,1],"kind":"Effective","note":""}]})");
    CHECK(run({"lattice-info", "-c", conflict}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("every command emits valid JSON")
{
    const std::vector<std::vector<std::string>> commands{
        {"lattice-info", "-c", cfg("quartic_b2_4.json"), "--json"},
        {"classify", "-c", cfg("quartic_b2_4.json"), "--class", "0,1", "--json"},
        {"companions", "-c", cfg("quartic_b2_4.json"), "--class", "0,1", "--json"},
        {"enumerate", "--preset", "ii", "--json"},
        {"destabilize", "-c", cfg("quartic_b2_0_bh4.json"), "--class", "1,2", "-d", "6", "--json"},
        {"verify", "--script", "case-B2pos4-Bh6", "--json"},
        {"theorem", "-c", cfg("quartic_b2_0_bh3.json"), "--json"},
        {"example-delpezzo", "-c", cfg("delpezzo_cover.json"), "--json"},
        {"dump", "--script", "case-B2neg2-Bh1"},
        {"dump", "--preset", "i-c"},
        {"dump", "-c", cfg("quartic_b2neg2_bh1.json")},
    };
    for (const auto& c : commands) {
        INFO(c[0]);
        const Out r = run(c);
        CHECK(r.code == 0);
        CHECK_NOTHROW(parse_json(r.out));
    }
    const Json th = parse_json(run(commands[6]).out);
    CHECK(th["status"] == "VERIFIED");
    CHECK(th["reduction"]["rule"] == "h-B");
    const Json lat = parse_json(run(commands[0]).out);
    CHECK(lat["signature"] == Json::array({1, 1}));
}

TEST_CASE("a dumped script verifies from file")
{
    const Out dumped = run({"dump", "--script", "case-B2zero-Bh4"});
    const std::string path = temp_file("k3acm_script.json", dumped.out);
    const Out r = run({"verify", "--file", path});
    CHECK(r.code == 0);
    CHECK(ends_with_line(r.out, "CONTRADICTION ESTABLISHED"));
    const Out cfgdump = run({"dump", "-c", cfg("quartic_b2_4.json")});
    const std::string again = temp_file("k3acm_cfg.json", cfgdump.out);
    CHECK(run({"dump", "-c", again}).out == cfgdump.out);
}
