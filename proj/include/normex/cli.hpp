#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace normex {

// Exit codes: 0 success, 1 semantic refusal (cyclic setup, world cap,
// missing explanation, ...), 2 input errors (unreadable file, parse or
// validation failure, malformed literal/formula).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace normex
