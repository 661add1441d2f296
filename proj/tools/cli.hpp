#ifndef SLOCC_TOOLS_CLI_HPP
#define SLOCC_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace slocc::cli {

// exit codes
enum : int {
    ok = 0,
    failed = 1, // also: inequivalent
    undecided = 2, // also: degenerate parameter
    parse_error = 3,
    not_in_field = 4,
    not_commuting = 5,
};

// args[0] is the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace slocc::cli

#endif
