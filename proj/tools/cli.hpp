#ifndef BIFORMS_TOOLS_CLI_HPP
#define BIFORMS_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "biforms/verify.hpp"

namespace biforms::cli {

// Exit codes: 0 success / all checks passed, 1 a check failed, 2 usage or
// parse error.
enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2 };

// args excludes the program name. The verify subcommand checks against the
// given fixtures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Fixtures& fixtures = reference_fixtures());

}  // namespace biforms::cli

#endif  // BIFORMS_TOOLS_CLI_HPP
