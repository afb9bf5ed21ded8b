#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ucsc {

// Exit codes: 0 success/Holds/empty search, 2 NotApplicable, 3 Fails or
// counterexample found, 64 usage error, 65 malformed input, 1 internal.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ucsc
