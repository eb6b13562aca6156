#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kripkit {

// Exit codes: 0 success/valid, 1 property fails, 2 usage error,
// 3 budget refusal.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kripkit
