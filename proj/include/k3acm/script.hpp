#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "k3acm/acm.hpp"
#include "k3acm/lattice.hpp"
#include "k3acm/piecewise.hpp"

// Derivation scripts: ordered arithmetic claims over lattice data plus named
// axiom citations, replayed exactly.
namespace k3acm {

// Integer literal, bound variable, class text (operand of class-valued ops),
// or an operator applied to arguments.
struct Expr {
    enum class Kind { Literal, Var, Class, Op };
    Kind kind = Kind::Literal;
    i64 value = 0;
    std::string name;  // variable name, class text, or operator name
    std::vector<Expr> args;

    static Expr lit(i64 v);
    static Expr var(std::string n);
    static Expr cls(std::string text);
    static Expr op(std::string n, std::vector<Expr> a);
    friend bool operator==(const Expr&, const Expr&) = default;
};

Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator-(Expr a);

std::string render(const Expr& e);

// Names of the operators run_script understands.
const std::vector<std::string>& expr_operators();

struct ArithmeticClaim {
    Expr lhs;
    Rel rel = Rel::Eq;
    Expr rhs;
    std::string cite;
    std::optional<std::string> bind;    // binds lhs's value after verifying
    std::optional<std::string> forall;  // claim must hold for every integer value
    std::optional<std::string> contradicts;  // axiom id this claim refutes
    friend bool operator==(const ArithmeticClaim&, const ArithmeticClaim&) = default;
};

struct Condition {
    Expr lhs;
    Rel rel = Rel::Eq;
    Expr rhs;
    friend bool operator==(const Condition&, const Condition&) = default;
};

// An arithmetic claim about one unknown: the integers meeting every condition
// are exactly `expect`. Binds the unknown when `expect` has one element.
struct SolveClaim {
    std::string var;
    std::vector<Condition> where;
    std::vector<i64> expect;
    std::string cite;
    friend bool operator==(const SolveClaim&, const SolveClaim&) = default;
};

struct AxiomUse {
    std::string id;
    std::string cite;
    friend bool operator==(const AxiomUse&, const AxiomUse&) = default;
};

using Step = std::variant<ArithmeticClaim, SolveClaim, AxiomUse>;

enum class ConclusionKind { Contradiction, Established };

struct Conclusion {
    ConclusionKind kind = ConclusionKind::Contradiction;
    std::string statement;  // statement id for Established
    friend bool operator==(const Conclusion&, const Conclusion&) = default;
};

// The (B^2, h.B, s, t) point a script refutes; absent for auxiliary scripts.
struct ScriptTarget {
    i64 b2 = 0;
    i64 hb = 0;
    i64 s = 0;
    i64 t = 0;
    friend bool operator==(const ScriptTarget&, const ScriptTarget&) = default;
};

struct DerivationScript {
    std::string tag;
    std::string title;
    Lattice lattice;
    NamedClasses classes;
    Assumptions assumptions;
    std::vector<Step> steps;
    Conclusion conclusion;
    std::optional<ScriptTarget> target;
    std::vector<std::string> depends;  // tags of scripts this one relies on
    friend bool operator==(const DerivationScript&, const DerivationScript&) = default;
};

enum class StepStatus { Verified, AxiomUsed, Failed };
std::string_view to_string(StepStatus status);

struct StepResult {
    std::size_t index = 0;
    std::string kind;  // arith, solve, axiom
    StepStatus status = StepStatus::Failed;
    std::string text;
    std::string cite;
    std::string detail;  // evaluated values, or the failure reason
    friend bool operator==(const StepResult&, const StepResult&) = default;
};

struct DerivationReport {
    std::string tag;
    bool success = false;
    std::vector<StepResult> steps;
    std::map<std::string, i64> bindings;
    std::string final_line;  // CONTRADICTION ESTABLISHED, ESTABLISHED: <id>, or FAILED: <reason>
    friend bool operator==(const DerivationReport&, const DerivationReport&) = default;
};

// Throws MalformedScript for unknown operators, axiom ids or class names, bad
// arity, variables used before binding, or a Contradiction script whose last
// step is not an arithmetic claim naming the refuted axiom.
void validate_script(const DerivationScript& script);

// Validates, then evaluates every step exactly. Evaluation errors (odd squares,
// overflow, failed identities) mark the step FAILED; they are not thrown.
DerivationReport run_script(const DerivationScript& script);

// Same script on another lattice and assumption list (e.g. a mutated form).
DerivationScript rebase(DerivationScript script, const Lattice& L, Assumptions assumptions);

}  // namespace k3acm
