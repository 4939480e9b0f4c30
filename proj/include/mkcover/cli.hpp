#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mkcover::cli {

// Dispatches the subcommands (mst, compute-mk, connectivity, check-order,
// extend-maximal, embed-weights, check-kminimal, gen, verify-suite).
// Exit codes: 0 success, 1 domain errors (bad input, usage, failed checks),
// 2 mathematical-invariant violations.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace mkcover::cli
