#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dioph {

// Exit codes: 0 success or claim holds, 1 claim refuted, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dioph
