#include "k3acm/io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "k3acm/error.hpp"

namespace k3acm {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw Error(Errc::ParseError, "field '" + where + "': " + what);
}

i64 as_int(const Json& j, const std::string& where)
{
    if (j.is_number_unsigned()) {
        if (j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<i64>::max()))
            fail(where, "integer out of range");
        return static_cast<i64>(j.get<std::uint64_t>());
    }
    if (!j.is_number_integer())
        fail(where, "expected integer");
    return j.get<i64>();
}

std::string as_string(const Json& j, const std::string& where)
{
    if (!j.is_string())
        fail(where, "expected string");
    return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& where)
{
    if (!j.is_array())
        fail(where, "expected array");
    return j;
}

std::vector<i64> int_list(const Json& j, const std::string& where)
{
    std::vector<i64> out;
    std::size_t i = 0;
    for (const auto& x : as_array(j, where))
        out.push_back(as_int(x, where + "[" + std::to_string(i++) + "]"));
    return out;
}

// Strict view of a JSON object: every key must be consumed.
class Fields {
public:
    Fields(const Json& j, std::string where) : j_(j), where_(std::move(where))
    {
        if (!j_.is_object())
            fail(where_, "expected object");
    }

    bool has(const std::string& key) const { return j_.contains(key); }

    const Json& at(const std::string& key)
    {
        if (!j_.contains(key))
            fail(path(key), "missing");
        seen_.insert(key);
        return j_.at(key);
    }

    std::string path(const std::string& key) const
    {
        return where_.empty() ? key : where_ + "." + key;
    }

    i64 integer(const std::string& key) { return as_int(at(key), path(key)); }
    std::string str(const std::string& key) { return as_string(at(key), path(key)); }
    bool boolean(const std::string& key)
    {
        const Json& v = at(key);
        if (!v.is_boolean())
            fail(path(key), "expected boolean");
        return v.get<bool>();
    }
    std::vector<i64> ints(const std::string& key) { return int_list(at(key), path(key)); }

    void done() const
    {
        for (const auto& item : j_.items())
            if (!seen_.count(item.key()))
                fail(path(item.key()), "unknown key");
    }

private:
    const Json& j_;
    std::string where_;
    std::set<std::string> seen_;
};

std::string idx(const std::string& where, std::size_t i)
{
    return where + "[" + std::to_string(i) + "]";
}

Rel rel_field(Fields& f, const std::string& key)
{
    const std::string text = f.str(key);
    try {
        return rel_from_string(text);
    } catch (const Error&) {
        fail(f.path(key), "unknown relation '" + text + "'");
    }
}

Json point_json(const Point& p)
{
    return Json::array({p.first, p.second});
}

Json claims_json(const std::vector<NumericClaim>& claims)
{
    Json out = Json::array();
    for (const auto& c : claims)
        out.push_back({{"statement", c.statement},
                       {"lhs", c.lhs},
                       {"rel", to_string(c.rel)},
                       {"rhs", c.rhs},
                       {"rule", c.rule},
                       {"verified", c.verified()}});
    return out;
}

}  // namespace

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        std::string msg = e.what();
        if (auto p = msg.find("parse error"); p != std::string::npos)
            msg = msg.substr(p);
        throw Error(Errc::ParseError, msg);
    }
}

Json lattice_to_json(const Lattice& L)
{
    Json gram = Json::array();
    for (const auto& row : L.gram())
        gram.push_back(row);
    return {{"rank", L.rank()},
            {"gram", gram},
            {"labels", L.labels()},
            {"ample", L.ample().coords},
            {"k3", L.k3()}};
}

namespace {

Lattice lattice_fields(Fields& f)
{
    const i64 rank = f.integer("rank");
    IntMatrix gram;
    const Json& g = as_array(f.at("gram"), f.path("gram"));
    for (std::size_t i = 0; i < g.size(); ++i)
        gram.push_back(int_list(g[i], idx(f.path("gram"), i)));
    std::vector<std::string> labels;
    const Json& l = as_array(f.at("labels"), f.path("labels"));
    for (std::size_t i = 0; i < l.size(); ++i)
        labels.push_back(as_string(l[i], idx(f.path("labels"), i)));
    DivClass ample(f.ints("ample"));
    const bool k3 = f.boolean("k3");
    if (rank < 1 || static_cast<std::size_t>(rank) != gram.size())
        throw Error(Errc::BadDimensions, "field 'rank' is " + std::to_string(rank) + " but gram has " +
                                             std::to_string(gram.size()) + " rows");
    return Lattice(std::move(gram), std::move(labels), std::move(ample), k3);
}

}  // namespace

Lattice lattice_from_json(const Json& j)
{
    Fields f(j, "lattice");
    Lattice L = lattice_fields(f);
    f.done();
    return L;
}

Json assumption_to_json(const Assumption& a)
{
    return {{"subject", a.subject.coords}, {"kind", to_string(a.kind)}, {"note", a.note}};
}

Assumption assumption_from_json(const Json& j, std::size_t rank)
{
    Fields f(j, "assumption");
    Assumption a;
    a.subject = DivClass(f.ints("subject"));
    const std::string kind = f.str("kind");
    try {
        a.kind = assumption_kind_from_string(kind);
    } catch (const Error&) {
        fail("assumption.kind", "unknown kind '" + kind + "'");
    }
    if (f.has("note"))
        a.note = f.str("note");
    f.done();
    if (a.subject.size() != rank)
        throw Error(Errc::DimensionMismatch, "assumption subject has " +
                                                 std::to_string(a.subject.size()) +
                                                 " coordinates, lattice rank is " +
                                                 std::to_string(rank));
    return a;
}

LatticeConfig config_from_json(const Json& j)
{
    Fields f(j, "");
    Lattice L = lattice_fields(f);
    Assumptions as;
    if (f.has("assumptions")) {
        const Json& arr = as_array(f.at("assumptions"), "assumptions");
        for (const auto& a : arr)
            as.push_back(assumption_from_json(a, L.rank()));
    }
    f.done();
    check_assumptions(L, as);
    return {std::move(L), std::move(as)};
}

Json config_to_json(const LatticeConfig& config)
{
    Json j = lattice_to_json(config.lattice);
    Json as = Json::array();
    for (const auto& a : config.assumptions)
        as.push_back(assumption_to_json(a));
    j["assumptions"] = as;
    return j;
}

LatticeConfig parse_config(std::string_view text)
{
    return config_from_json(parse_json(text));
}

LatticeConfig load_config(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::ParseError, "cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string dump_config(const LatticeConfig& config)
{
    return config_to_json(config).dump(2) + "\n";
}

// Literal: number; variable: {"var": name}; class: {"class": text};
// operator: {"op": name, "args": [...]}.
Json expr_to_json(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::Literal: return e.value;
    case Expr::Kind::Var: return {{"var", e.name}};
    case Expr::Kind::Class: return {{"class", e.name}};
    case Expr::Kind::Op: {
        Json args = Json::array();
        for (const auto& a : e.args)
            args.push_back(expr_to_json(a));
        return {{"op", e.name}, {"args", args}};
    }
    }
    return nullptr;
}

Expr expr_from_json(const Json& j)
{
    if (j.is_number())
        return Expr::lit(as_int(j, "expr"));
    Fields f(j, "expr");
    Expr out;
    if (f.has("var")) {
        out = Expr::var(f.str("var"));
    } else if (f.has("class")) {
        out = Expr::cls(f.str("class"));
    } else if (f.has("op")) {
        std::vector<Expr> args;
        for (const auto& a : as_array(f.at("args"), "expr.args"))
            args.push_back(expr_from_json(a));
        out = Expr::op(f.str("op"), std::move(args));
    } else {
        fail("expr", "expected a number or an object with var, class or op");
    }
    f.done();
    return out;
}

Json step_to_json(const Step& s)
{
    if (const auto* a = std::get_if<ArithmeticClaim>(&s)) {
        Json j = {{"kind", "arith"},
                  {"lhs", expr_to_json(a->lhs)},
                  {"rel", to_string(a->rel)},
                  {"rhs", expr_to_json(a->rhs)},
                  {"cite", a->cite}};
        if (a->bind)
            j["bind"] = *a->bind;
        if (a->forall)
            j["forall"] = *a->forall;
        if (a->contradicts)
            j["contradicts"] = *a->contradicts;
        return j;
    }
    if (const auto* v = std::get_if<SolveClaim>(&s)) {
        Json where = Json::array();
        for (const auto& c : v->where)
            where.push_back({{"lhs", expr_to_json(c.lhs)},
                             {"rel", to_string(c.rel)},
                             {"rhs", expr_to_json(c.rhs)}});
        return {{"kind", "solve"},
                {"var", v->var},
                {"where", where},
                {"expect", v->expect},
                {"cite", v->cite}};
    }
    const auto& x = std::get<AxiomUse>(s);
    return {{"kind", "axiom"}, {"id", x.id}, {"cite", x.cite}};
}

Step step_from_json(const Json& j)
{
    Fields f(j, "step");
    const std::string kind = f.str("kind");
    Step out;
    if (kind == "arith") {
        ArithmeticClaim a;
        a.lhs = expr_from_json(f.at("lhs"));
        a.rel = rel_field(f, "rel");
        a.rhs = expr_from_json(f.at("rhs"));
        a.cite = f.str("cite");
        if (f.has("bind"))
            a.bind = f.str("bind");
        if (f.has("forall"))
            a.forall = f.str("forall");
        if (f.has("contradicts"))
            a.contradicts = f.str("contradicts");
        out = std::move(a);
    } else if (kind == "solve") {
        SolveClaim v;
        v.var = f.str("var");
        for (const auto& c : as_array(f.at("where"), "step.where")) {
            Fields g(c, "step.where");
            Condition cond;
            cond.lhs = expr_from_json(g.at("lhs"));
            cond.rel = rel_field(g, "rel");
            cond.rhs = expr_from_json(g.at("rhs"));
            g.done();
            v.where.push_back(std::move(cond));
        }
        v.expect = f.ints("expect");
        v.cite = f.str("cite");
        out = std::move(v);
    } else if (kind == "axiom") {
        out = AxiomUse{f.str("id"), f.str("cite")};
    } else {
        fail("step.kind", "expected arith, solve or axiom");
    }
    f.done();
    return out;
}

Json script_to_json(const DerivationScript& s)
{
    Json classes = Json::object();
    for (const auto& [name, cls] : s.classes)
        classes[name] = cls.coords;
    Json as = Json::array();
    for (const auto& a : s.assumptions)
        as.push_back(assumption_to_json(a));
    Json steps = Json::array();
    for (const auto& st : s.steps)
        steps.push_back(step_to_json(st));
    Json j = {{"tag", s.tag},
              {"title", s.title},
              {"lattice", lattice_to_json(s.lattice)},
              {"classes", classes},
              {"assumptions", as},
              {"steps", steps},
              {"conclusion",
               {{"kind", s.conclusion.kind == ConclusionKind::Contradiction ? "contradiction"
                                                                            : "established"},
                {"statement", s.conclusion.statement}}},
              {"depends", s.depends}};
    if (s.target)
        j["target"] = {{"b2", s.target->b2}, {"hb", s.target->hb}, {"s", s.target->s},
                       {"t", s.target->t}};
    return j;
}

DerivationScript script_from_json(const Json& j)
{
    Fields f(j, "script");
    const std::string tag = f.str("tag");
    const std::string title = f.has("title") ? f.str("title") : std::string();
    DerivationScript s{tag, title, lattice_from_json(f.at("lattice")), {}, {}, {}, {}, {}, {}};
    if (f.has("classes")) {
        Fields c(f.at("classes"), "script.classes");
        for (const auto& item : f.at("classes").items())
            s.classes[item.key()] = DivClass(c.ints(item.key()));
        c.done();
        for (const auto& [name, cls] : s.classes)
            if (cls.size() != s.lattice.rank())
                throw Error(Errc::DimensionMismatch, "class '" + name + "' has wrong length");
    }
    if (f.has("assumptions"))
        for (const auto& a : as_array(f.at("assumptions"), "script.assumptions"))
            s.assumptions.push_back(assumption_from_json(a, s.lattice.rank()));
    std::size_t i = 0;
    for (const auto& st : as_array(f.at("steps"), "script.steps")) {
        try {
            s.steps.push_back(step_from_json(st));
        } catch (const Error& e) {
            throw Error(Errc::ParseError, "step " + std::to_string(i + 1) + ": " + e.what());
        }
        ++i;
    }
    {
        Fields c(f.at("conclusion"), "script.conclusion");
        const std::string kind = c.str("kind");
        if (kind == "contradiction")
            s.conclusion.kind = ConclusionKind::Contradiction;
        else if (kind == "established")
            s.conclusion.kind = ConclusionKind::Established;
        else
            fail("script.conclusion.kind", "expected contradiction or established");
        if (c.has("statement"))
            s.conclusion.statement = c.str("statement");
        c.done();
    }
    if (f.has("target")) {
        Fields t(f.at("target"), "script.target");
        s.target = ScriptTarget{t.integer("b2"), t.integer("hb"), t.integer("s"), t.integer("t")};
        t.done();
    }
    if (f.has("depends"))
        for (const auto& d : as_array(f.at("depends"), "script.depends"))
            s.depends.push_back(as_string(d, "script.depends"));
    f.done();
    return s;
}

Json report_to_json(const DerivationReport& r)
{
    Json steps = Json::array();
    for (const auto& s : r.steps)
        steps.push_back({{"index", s.index},
                         {"kind", s.kind},
                         {"status", to_string(s.status)},
                         {"text", s.text},
                         {"cite", s.cite},
                         {"detail", s.detail}});
    Json bindings = Json::object();
    for (const auto& [k, v] : r.bindings)
        bindings[k] = v;
    return {{"tag", r.tag},
            {"status", r.success ? "Success" : "Failure"},
            {"final", r.final_line},
            {"steps", steps},
            {"bindings", bindings}};
}

Json case_spec_to_json(const CaseSpec& spec)
{
    Json cs = Json::array();
    for (const auto& c : spec.constraints) {
        Json j = {{"kind", to_string(c.kind)}};
        if (c.kind != ConstraintKind::AbsTAtLeast && c.kind != ConstraintKind::QuadraticIneq)
            j["against"] = c.against.coords;
        if (c.kind == ConstraintKind::Custom) {
            j["modulus"] = c.modulus;
            j["residue"] = c.residue;
        } else {
            if (c.kind == ConstraintKind::LinearIneq || c.kind == ConstraintKind::QuadraticIneq)
                j["rel"] = to_string(c.rel);
            j["bound"] = c.bound;
        }
        j["rule"] = c.why.rule;
        j["cite"] = c.why.cite;
        j["text"] = describe(spec, c);
        cs.push_back(j);
    }
    return {{"tag", spec.tag},
            {"lattice", lattice_to_json(spec.lattice)},
            {"box", spec.box},
            {"constraints", cs}};
}

CaseSpec case_spec_from_json(const Json& j)
{
    Fields f(j, "case");
    CaseSpec spec{f.str("tag"), lattice_from_json(f.at("lattice")), {}, 32};
    if (f.has("box"))
        spec.box = f.integer("box");
    std::size_t i = 0;
    for (const auto& cj : as_array(f.at("constraints"), "case.constraints")) {
        Fields c(cj, idx("case.constraints", i++));
        Constraint con;
        const std::string kind = c.str("kind");
        try {
            con.kind = constraint_kind_from_string(kind);
        } catch (const Error&) {
            fail(c.path("kind"), "unknown constraint kind '" + kind + "'");
        }
        if (c.has("against"))
            con.against = DivClass(c.ints("against"));
        else
            con.against = DivClass::zero(spec.lattice.rank());
        if (con.against.size() != spec.lattice.rank())
            throw Error(Errc::DimensionMismatch, c.path("against") + " has wrong length");
        if (c.has("rel"))
            con.rel = rel_field(c, "rel");
        if (c.has("bound"))
            con.bound = c.integer("bound");
        if (c.has("modulus"))
            con.modulus = c.integer("modulus");
        if (c.has("residue"))
            con.residue = c.integer("residue");
        if (con.kind == ConstraintKind::Custom && con.modulus <= 0)
            fail(c.path("modulus"), "Custom constraints need a positive modulus");
        if (c.has("rule"))
            con.why.rule = c.str("rule");
        if (c.has("cite"))
            con.why.cite = c.str("cite");
        if (c.has("text"))
            c.str("text");  // informational only
        c.done();
        spec.constraints.push_back(std::move(con));
    }
    f.done();
    return spec;
}

Json solutions_to_json(const std::vector<Point>& points)
{
    Json sol = Json::array();
    for (const auto& p : points)
        sol.push_back(point_json(p));
    return {{"solutions", sol}};
}

Json classification_to_json(const Lattice& L, const DivClass& b, const AcmClassification& c)
{
    Json missing = Json::array();
    for (const auto& a : c.missing)
        missing.push_back(assumption_to_json(a));
    return {{"class", format_class(L, b)},
            {"coords", b.coords},
            {"square", self_int(L, b)},
            {"degree", degree(L, b)},
            {"status", to_string(c.status)},
            {"case", to_string(c.case_tag)},
            {"missing", missing}};
}

Json companions_to_json(const Lattice& L, const std::vector<Companion>& companions)
{
    Json out = Json::array();
    for (const auto& c : companions)
        out.push_back({{"rule", c.rule},
                       {"class", format_class(L, c.cls)},
                       {"coords", c.cls.coords},
                       {"status", to_string(c.classification.status)}});
    return {{"companions", out}};
}

Json eliminations_to_json(const Lattice& L, const std::vector<PairElimination>& records)
{
    Json out = Json::array();
    for (const auto& r : records) {
        Json cands = Json::array();
        for (const auto& c : r.candidates)
            cands.push_back({{"pairing", c.pairing},
                             {"n_square", c.n_sq},
                             {"h_n", c.h_n},
                             {"c_n", c.c_n},
                             {"m_n", c.m_n},
                             {"m_square", c.m_sq},
                             {"multiplicity", c.multiplicity},
                             {"len_zprime", c.len_zprime},
                             {"rule", c.rule},
                             {"axiom", c.axiom},
                             {"claims", claims_json(c.claims)}});
        out.push_back({{"c", format_class(L, r.c)},
                       {"d", r.d},
                       {"mode", to_string(r.mode)},
                       {"n_square", r.n_square},
                       {"aggregate", r.aggregate},
                       {"len_zprime", r.len_zprime},
                       {"outcome", r.outcome},
                       {"trace", claims_json(r.trace)},
                       {"candidates", cands},
                       {"missing", r.missing}});
    }
    return {{"records", out}, {"unresolved", unresolved_count(records)}};
}

Json theorem_to_json(const TheoremReport& r)
{
    Json small = Json::array();
    for (const auto& p : r.small_t)
        small.push_back({{"st", point_json(p.st)},
                         {"resolved", p.resolved},
                         {"via", p.via},
                         {"twist", p.twist},
                         {"x", p.x}});
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json reps = Json::array();
        for (const auto& rep : c.reports)
            reps.push_back({{"tag", rep.tag},
                            {"status", rep.success ? "Success" : "Failure"},
                            {"final", rep.final_line}});
        checks.push_back({{"st", point_json(c.st)},
                          {"script", c.script},
                          {"success", c.success},
                          {"reports", reps}});
    }
    Json survivors = Json::array();
    for (const auto& p : r.survivors)
        survivors.push_back(point_json(p));
    return {{"b2", r.b2},
            {"hb", r.hb},
            {"classification", to_string(r.classification.status)},
            {"reduction",
             {{"rule", r.reduction.rule},
              {"b", r.reduction.new_b.coords},
              {"b2", r.reduction.b2},
              {"hb", r.reduction.hb}}},
            {"preset", r.preset},
            {"survivors", survivors},
            {"checks", checks},
            {"small_t", small},
            {"unmatched", r.unmatched},
            {"status", r.status()}};
}

}  // namespace k3acm
