// Command-line front end shared by the lgtoric binary and its tests.
#ifndef LGTORIC_CLI_HPP
#define LGTORIC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lgtoric::cli {

enum ExitCode
{
    kSuccess = 0,
    kVerificationFailed = 1,
    kInputError = 2,
};

/// Runs one invocation; args excludes the program name. JSON goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lgtoric::cli

#endif
