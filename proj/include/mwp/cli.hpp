#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mwp::cli {

// Entry point shared by the binary and the tests. Exit codes: 0 when every
// analyzed function has a polynomial bound, 2 when at least one has none,
// 1 on usage, parse or analysis errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mwp::cli
