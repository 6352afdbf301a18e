#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliquecover::cli {

// Full command-line front end. Parses args (program name excluded), reads
// the collection from `in` when no --input path is given, writes results to
// `out` and diagnostics to `err`. Returns the process exit code: 0 success,
// 1 verification failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cliquecover::cli
