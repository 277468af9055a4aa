#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3acm {

// Exit codes: 0 success, 1 verification failure, 2 bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3acm
