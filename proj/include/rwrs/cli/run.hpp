#pragma once

#include <string>
#include <vector>

namespace rwrs::cli
{
//! Exit statuses of the rwrs_lab tool.
enum ExitCode : int
{
    exit_ok = 0,
    exit_failure = 1,  //!< I/O or internal error
    exit_invalid = 2,  //!< bad config, flags or law
    exit_assertion = 3,  //!< --assert given and a check failed
};

/*!
 * Parse the command line (without the program name), run one subcommand
 * and write its reports. Never throws; errors are printed to stderr and
 * mapped to an exit status.
 */
int run_cli(std::vector<std::string> args);

int run_cli(int argc, char const* const* argv);

}  // namespace rwrs::cli
