#ifndef HAMDEC_CLI_HPP
#define HAMDEC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hamdec {

/// Exit codes: 0 success, 1 invalid input, 2 construction error, 3 NotFound.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hamdec

#endif
