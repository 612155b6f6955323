#ifndef RMDEC_CLI_HPP
#define RMDEC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rmdec {

// Command-line front end. `args` excludes the program name. Reads stdin via
// `in` when a command has no --in path; normal output goes to `out`,
// diagnostics to `err`. Returns 0 on success, 1 on decode failure, 2 on
// usage or format errors. Output files are written only after a command has
// fully succeeded.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace rmdec

#endif
