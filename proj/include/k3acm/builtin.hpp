#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3acm/script.hpp"

namespace k3acm {

std::vector<DerivationScript> builtin_scripts();
std::optional<DerivationScript> find_builtin(const std::string& tag);
// Script refuting C = s h + t B on a lattice with invariants (B^2, h.B).
std::optional<DerivationScript> find_case_script(i64 b2, i64 hb, i64 s, i64 t);

}  // namespace k3acm
