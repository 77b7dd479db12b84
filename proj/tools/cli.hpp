// cli.hpp - entry point of the `alp` command-line tool, callable in-process.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alp::cli {

// Runs one command. Returns the process exit status: 0 on success, 1 on any
// error or verification failure (with a diagnostic on `err`), 2 on a usage
// error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alp::cli
