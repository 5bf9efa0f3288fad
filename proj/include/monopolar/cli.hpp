#ifndef MONOPOLAR_CLI_HPP
#define MONOPOLAR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace monopolar::cli {

// Runs one command line (without the program name). Exit codes: 0 yes or
// success, 1 no or invalid, 2 usage or input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace monopolar::cli

#endif  // MONOPOLAR_CLI_HPP
