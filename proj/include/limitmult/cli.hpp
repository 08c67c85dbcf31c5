#ifndef LIMITMULT_CLI_HPP
#define LIMITMULT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace limitmult {

// Full command-line entry point: parses args (without argv[0]), runs the
// requested subcommand and writes the document to out. Deterministic:
// identical invocations produce byte-identical output.
//
// Exit codes: 0 success, 2 invalid input, 3 unsupported regime, 1 internal.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace limitmult

#endif
