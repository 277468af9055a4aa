#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "k3acm/acm.hpp"
#include "k3acm/casework.hpp"
#include "k3acm/destabilize.hpp"
#include "k3acm/script.hpp"
#include "k3acm/theorem.hpp"

// JSON forms of configs, case specs, scripts and reports. Readers are strict:
// unknown keys and wrong types raise ParseError naming the field (and, for
// syntax errors, the line and column).
namespace k3acm {

using Json = nlohmann::ordered_json;

struct LatticeConfig {
    Lattice lattice;
    Assumptions assumptions;
    friend bool operator==(const LatticeConfig&, const LatticeConfig&) = default;
};

// Parses JSON text; syntax errors report "line L, column C".
Json parse_json(std::string_view text);

LatticeConfig config_from_json(const Json& j);
Json config_to_json(const LatticeConfig& config);
LatticeConfig parse_config(std::string_view text);
// Reads and parses a file; an unreadable file is a ParseError.
LatticeConfig load_config(const std::string& path);
std::string dump_config(const LatticeConfig& config);

Json lattice_to_json(const Lattice& L);   // config without assumptions
Lattice lattice_from_json(const Json& j);
Json assumption_to_json(const Assumption& a);
Assumption assumption_from_json(const Json& j, std::size_t rank);

Json expr_to_json(const Expr& e);
Expr expr_from_json(const Json& j);
Json step_to_json(const Step& s);
Step step_from_json(const Json& j);
Json script_to_json(const DerivationScript& s);
DerivationScript script_from_json(const Json& j);
Json report_to_json(const DerivationReport& r);

Json case_spec_to_json(const CaseSpec& spec);
CaseSpec case_spec_from_json(const Json& j);
Json solutions_to_json(const std::vector<Point>& points);

Json classification_to_json(const Lattice& L, const DivClass& b, const AcmClassification& c);
Json companions_to_json(const Lattice& L, const std::vector<Companion>& companions);
Json eliminations_to_json(const Lattice& L, const std::vector<PairElimination>& records);
Json theorem_to_json(const TheoremReport& r);

}  // namespace k3acm
