#include "k3acm/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "k3acm/builtin.hpp"
#include "k3acm/error.hpp"
#include "k3acm/io.hpp"

namespace k3acm {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct Options {
    std::string config;
    std::string cls;
    std::string preset;
    std::string script;
    std::string file;
    std::string expect;
    std::string mode = "not-simple";
    i64 box = 32;
    i64 d = 0;
    bool json = false;
    bool no_abs_t = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::ParseError, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LatticeConfig config_or(const Options& o, const Lattice& fallback)
{
    if (o.config.empty())
        return {fallback, {}};
    return load_config(o.config);
}

LatticeConfig require_config(const Options& o)
{
    if (o.config.empty())
        throw Error(Errc::BadParameters, "this command needs -c <config.json>");
    return load_config(o.config);
}

DivClass require_class(const Options& o, const Lattice& L)
{
    if (o.cls.empty())
        throw Error(Errc::BadParameters, "this command needs --class <coefficients>");
    return parse_coords(L, o.cls);
}

void print_report(std::ostream& out, const DerivationReport& r)
{
    out << "script " << r.tag << "\n";
    for (const auto& s : r.steps) {
        out << "  [" << s.index << "] " << to_string(s.status) << "  " << s.kind << "  " << s.text;
        if (!s.detail.empty())
            out << "  {" << s.detail << "}";
        out << "\n";
        if (!s.cite.empty())
            out << "        cite: " << s.cite << "\n";
    }
    out << r.final_line << "\n";
}

int cmd_lattice_info(const Options& o, std::ostream& out)
{
    const LatticeConfig cfg = require_config(o);
    const Lattice& L = cfg.lattice;
    const Signature sig = signature(L);
    if (o.json) {
        Json j = config_to_json(cfg);
        j["signature"] = Json::array({sig.positive, sig.negative});
        j["even"] = is_even(L);
        j["ample_square"] = self_int(L, L.ample());
        out << j.dump() << "\n";
        return kOk;
    }
    out << "rank " << L.rank() << "\nlabels";
    for (const auto& l : L.labels())
        out << " " << l;
    out << "\ngram\n";
    for (const auto& row : L.gram()) {
        out << " ";
        for (i64 x : row)
            out << " " << x;
        out << "\n";
    }
    out << "ample " << format_class(L, L.ample()) << " (square " << self_int(L, L.ample()) << ")\n"
        << "signature (" << sig.positive << "," << sig.negative << ")\n"
        << "even " << (is_even(L) ? "yes" : "no") << "\n"
        << "assumptions " << cfg.assumptions.size() << "\n";
    for (const auto& a : cfg.assumptions)
        out << "  " << to_string(a.kind) << " " << format_class(L, a.subject)
            << (a.note.empty() ? "" : "  (" + a.note + ")") << "\n";
    return kOk;
}

int cmd_classify(const Options& o, std::ostream& out)
{
    const LatticeConfig cfg = require_config(o);
    const DivClass b = require_class(o, cfg.lattice);
    const AcmClassification c = is_initialized_acm(cfg.lattice, b, cfg.assumptions);
    if (o.json) {
        out << classification_to_json(cfg.lattice, b, c).dump() << "\n";
    } else {
        out << format_class(cfg.lattice, b) << ": B^2 = " << self_int(cfg.lattice, b)
            << ", h.B = " << degree(cfg.lattice, b) << ", case " << to_string(c.case_tag) << "\n";
        for (const auto& m : c.missing)
            out << "  missing: " << to_string(m.kind) << " " << format_class(cfg.lattice, m.subject)
                << "\n";
        out << to_string(c.status) << "\n";
    }
    if (!o.expect.empty() && o.expect != to_string(c.status))
        return kFailed;
    return kOk;
}

int cmd_companions(const Options& o, std::ostream& out)
{
    const LatticeConfig cfg = require_config(o);
    const DivClass b = require_class(o, cfg.lattice);
    const auto c = is_initialized_acm(cfg.lattice, b, cfg.assumptions);
    const auto comps = acm_companions(cfg.lattice, b, c, cfg.assumptions);
    if (o.json) {
        out << companions_to_json(cfg.lattice, comps).dump() << "\n";
        return kOk;
    }
    for (const auto& x : comps)
        out << x.rule << ": " << format_class(cfg.lattice, x.cls) << "  "
            << (x.rule == "dual" ? "aCM, not initialized" : to_string(x.classification.status))
            << "\n";
    return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out)
{
    CaseSpec spec{"", quartic_lattice(-2, 1), {}, 32};
    if (!o.file.empty()) {
        spec = case_spec_from_json(parse_json(read_file(o.file)));
    } else {
        if (o.preset.empty())
            throw Error(Errc::BadParameters, "enumerate needs --preset or --file");
        std::optional<CaseSpec> canonical;
        for (auto& p : lemma51_presets())
            if (p.tag == o.preset)
                canonical = p;
        if (!canonical)
            throw Error(Errc::BadParameters, "unknown preset '" + o.preset + "'");
        spec = lemma51_preset(o.preset, config_or(o, canonical->lattice).lattice);
    }
    if (o.box != 32 || o.file.empty())
        spec.box = o.box;
    if (o.no_abs_t)
        spec = without_abs_t(spec);
    const auto sol = enumerate_case(spec);
    if (o.json) {
        out << solutions_to_json(sol).dump() << "\n";
        return kOk;
    }
    out << "preset " << spec.tag << ", box " << spec.box << "\n";
    for (const auto& c : spec.constraints)
        out << "  " << describe(spec, c) << "    [" << c.why.rule << "] " << c.why.cite << "\n";
    out << "solutions (s,t):";
    for (const auto& p : sol)
        out << " (" << p.first << "," << p.second << ")";
    out << (sol.empty() ? " none" : "") << "\n";
    return kOk;
}

int cmd_destabilize(const Options& o, std::ostream& out)
{
    const LatticeConfig cfg = require_config(o);
    const DivClass c = require_class(o, cfg.lattice);
    const PairMode mode = pair_mode_from_string(o.mode);
    const auto records = enumerate_destabilizing(cfg.lattice, c, o.d, cfg.assumptions, mode);
    const i64 open = unresolved_count(records);
    if (o.json) {
        out << eliminations_to_json(cfg.lattice, records).dump() << "\n";
        return open == 0 ? kOk : kFailed;
    }
    out << "C = " << format_class(cfg.lattice, c) << ", d = " << o.d << ", mode " << o.mode << "\n";
    for (const auto& r : records) {
        out << "  N^2 " << (r.aggregate ? ">= " : "= ") << r.n_square << ": " << r.outcome;
        if (!r.candidates.empty())
            out << " (" << r.candidates.size() << " candidates)";
        out << "\n";
        for (const auto& t : r.trace)
            out << "      " << t.statement << ": " << t.lhs << " " << to_string(t.rel) << " " << t.rhs
                << "  [" << t.rule << "]\n";
        for (const auto& cand : r.candidates) {
            out << "      N.basis = (";
            for (std::size_t i = 0; i < cand.pairing.size(); ++i)
                out << (i ? "," : "") << cand.pairing[i];
            out << "), h.N = " << cand.h_n << ", M.N = " << cand.m_n << ": " << cand.rule;
            if (!cand.axiom.empty())
                out << " [" << cand.axiom << "]";
            out << "\n";
        }
        for (const auto& m : r.missing)
            out << "      missing: " << m << "\n";
    }
    out << (open == 0 ? "ALL BRANCHES ELIMINATED" : "UNRESOLVED: " + std::to_string(open)) << "\n";
    return open == 0 ? kOk : kFailed;
}

int emit_report(const Options& o, std::ostream& out, const DerivationReport& r)
{
    if (o.json)
        out << report_to_json(r).dump() << "\n";
    else
        print_report(out, r);
    return r.success ? kOk : kFailed;
}

DerivationScript named_script(const std::string& tag)
{
    auto s = find_builtin(tag);
    if (!s)
        throw Error(Errc::BadParameters, "unknown script '" + tag + "'");
    return *s;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    if (o.script.empty() == o.file.empty())
        throw Error(Errc::BadParameters, "verify needs exactly one of --script or --file");
    DerivationScript s = o.file.empty() ? named_script(o.script)
                                        : script_from_json(parse_json(read_file(o.file)));
    if (!o.config.empty()) {
        LatticeConfig cfg = load_config(o.config);
        s = rebase(std::move(s), cfg.lattice, std::move(cfg.assumptions));
    }
    return emit_report(o, out, run_script(s));
}

int cmd_example(const Options& o, std::ostream& out)
{
    DerivationScript s = named_script("example-delpezzo");
    if (!o.config.empty()) {
        LatticeConfig cfg = load_config(o.config);
        s = rebase(std::move(s), cfg.lattice, std::move(cfg.assumptions));
    }
    return emit_report(o, out, run_script(s));
}

int cmd_theorem(const Options& o, std::ostream& out)
{
    const LatticeConfig cfg = require_config(o);
    const TheoremReport r =
        o.cls.empty() ? verify_theorem_necessity(cfg.lattice, cfg.assumptions)
                      : verify_theorem_necessity(cfg.lattice, parse_coords(cfg.lattice, o.cls),
                                                 cfg.assumptions);
    if (o.json) {
        out << theorem_to_json(r).dump() << "\n";
        return r.verified ? kOk : kFailed;
    }
    out << "B^2 = " << r.b2 << ", h.B = " << r.hb << ": " << to_string(r.classification.status)
        << "\n";
    if (!r.reduction.rule.empty())
        out << "reduced to B' = " << r.reduction.rule << " with (B'^2, h.B') = (" << r.reduction.b2
            << "," << r.reduction.hb << ")\n";
    out << "case list " << r.preset << "\n";
    for (const auto& p : r.small_t)
        out << "  (" << p.st.first << "," << p.st.second << ") |t|<=1: "
            << (p.resolved ? "C = " + std::to_string(p.twist) + "h + (" + p.x + ")  [" + p.via + "]"
                        : "unresolved")
            << "\n";
    for (const auto& c : r.checks) {
        out << "  (" << c.st.first << "," << c.st.second << ") survivor: "
            << (c.script.empty() ? "no script" : c.script);
        for (const auto& rep : c.reports)
            out << "\n      " << rep.tag << ": " << rep.final_line;
        out << "\n";
    }
    for (const auto& u : r.unmatched)
        out << "  unmatched: " << u << "\n";
    out << r.status() << "\n";
    return r.verified ? kOk : kFailed;
}

int cmd_dump(const Options& o, std::ostream& out)
{
    if (!o.script.empty()) {
        out << script_to_json(named_script(o.script)).dump(2) << "\n";
        return kOk;
    }
    if (!o.preset.empty()) {
        for (const auto& p : lemma51_presets())
            if (p.tag == o.preset) {
                out << case_spec_to_json(p).dump(2) << "\n";
                return kOk;
            }
        throw Error(Errc::BadParameters, "unknown preset '" + o.preset + "'");
    }
    if (!o.config.empty()) {
        out << dump_config(load_config(o.config));
        return kOk;
    }
    Json tags = Json::array();
    for (const auto& s : builtin_scripts())
        tags.push_back(s.tag);
    out << Json{{"scripts", tags}}.dump() << "\n";
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"k3acm: lattice arithmetic and case replays for aCM line bundles on quartic K3 surfaces",
                 "k3acm"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub, bool needs_config) {
        auto* opt = sub->add_option("-c,--config", o.config, "lattice config (JSON)");
        if (needs_config)
            opt->required();
        sub->add_flag("--json", o.json, "emit JSON");
    };
    auto* info = app.add_subcommand("lattice-info", "form, signature and assumptions of a config");
    common(info, true);
    auto* classify = app.add_subcommand("classify", "initialized aCM classification of O_X(B)");
    common(classify, true);
    classify->add_option("--class", o.cls, "coefficients in label order, e.g. 0,1")->required();
    classify->add_option("--expect", o.expect, "exit 1 unless the status equals this");
    auto* comps = app.add_subcommand("companions", "aCM companions of an initialized aCM class");
    common(comps, true);
    comps->add_option("--class", o.cls, "coefficients in label order")->required();
    auto* en = app.add_subcommand("enumerate", "integer points of a case list");
    common(en, false);
    en->add_option("--preset", o.preset, "i-a, i-b, i-c, ii or iii");
    en->add_option("--file", o.file, "case spec JSON");
    en->add_option("--box", o.box, "search box |s|,|t| <= box");
    en->add_flag("--no-abs-t", o.no_abs_t, "drop the |t| >= 2 constraint");
    auto* de = app.add_subcommand("destabilize", "eliminate destabilizing pairs (M, N)");
    common(de, true);
    de->add_option("--class", o.cls, "C in label order")->required();
    de->add_option("-d,--degree", o.d, "pencil degree")->required();
    de->add_option("--mode", o.mode, "not-simple, gonal or gonality-below");
    auto* ve = app.add_subcommand("verify", "replay a derivation script");
    common(ve, false);
    ve->add_option("--script", o.script, "builtin script tag");
    ve->add_option("--file", o.file, "script JSON");
    auto* th = app.add_subcommand("theorem", "necessity replay for C in Zh + ZB");
    common(th, true);
    th->add_option("--class", o.cls, "B in label order (default: second basis vector)");
    auto* ex = app.add_subcommand("example-delpezzo", "identities of the del Pezzo double cover");
    common(ex, false);
    auto* du = app.add_subcommand("dump", "print a builtin script, preset or config as JSON");
    du->add_option("-c,--config", o.config, "lattice config (JSON)");
    du->add_option("--script", o.script, "builtin script tag");
    du->add_option("--preset", o.preset, "preset tag");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }

    try {
        if (info->parsed()) return cmd_lattice_info(o, out);
        if (classify->parsed()) return cmd_classify(o, out);
        if (comps->parsed()) return cmd_companions(o, out);
        if (en->parsed()) return cmd_enumerate(o, out);
        if (de->parsed()) return cmd_destabilize(o, out);
        if (ve->parsed()) return cmd_verify(o, out);
        if (th->parsed()) return cmd_theorem(o, out);
        if (ex->parsed()) return cmd_example(o, out);
        if (du->parsed()) return cmd_dump(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == Errc::BoxTooSmall ? kFailed : kBadInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}

}  // namespace k3acm
