#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace k3acm {

// Cohomological facts imported as named axioms. Derivation scripts cite them
// in AxiomUse steps; they are recorded, never checked.
struct AxiomInfo {
    std::string id;
    std::string statement;
};

const std::vector<AxiomInfo>& axiom_registry();
bool is_known_axiom(std::string_view id);
const AxiomInfo& axiom(std::string_view id);

}  // namespace k3acm
