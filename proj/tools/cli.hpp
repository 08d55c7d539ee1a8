#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spine::cli {

// Runs one command line (without the program name). Results go to out,
// diagnostics to err. Returns 0 on success, 1 on a domain error and 2 on a
// usage error (bad flags, malformed literals, unreadable files).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace spine::cli
