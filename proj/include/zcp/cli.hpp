#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zcp::cli {

// Full command-line surface: gen, analyze, search, pmepr, table. Returns the
// process exit code; zero only when every verification in the invocation
// passed. Streams are injected so tests can capture output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zcp::cli
