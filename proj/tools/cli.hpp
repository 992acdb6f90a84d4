#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptdfa::cli {

enum ExitCode : int {
    ok = 0,
    data_error = 1,
    usage_error = 2,
    relation_false = 3,
};

/// Runs one command line (args[0] is the program name). `in`/`out` stand in
/// for standard input/output when a path is "-"; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace ptdfa::cli
