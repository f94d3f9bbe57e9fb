#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace afflat::cli {

enum Exit { Ok = 0, Malformed = 2, NotInClassExit = 3, Internal = 4, Resource = 5 };

/// Runs one command line (without the program name). Input files are read
/// from disk, "-" from `in`; the result or the {"error": ...} payload goes to
/// `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out);

}  // namespace afflat::cli
