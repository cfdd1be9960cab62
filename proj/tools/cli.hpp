#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace helixforge::cli {

// Runs one command line (without the program name) against the given
// streams. Returns the process exit code:
//   0  success
//   1  usage or domain error (bad flag, bad value, unreadable config, ...)
//   2  a verification command found a failing identity
//
// Defaults for any flag the command line leaves unset may come from the file
// named by the HELIXFORGE_CONFIG environment variable, a list of key=value
// lines using the long flag names without the leading dashes. Explicit flags
// always win over the config file.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace helixforge::cli
