#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace synkit {

// Exit codes: 0 ok, 1 usage, 2 parse/input error, 3 not synchronizing,
// 4 cap exceeded, 5 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace synkit
