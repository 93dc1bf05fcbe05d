#ifndef K4_CLI_HPP
#define K4_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace k4 {

// Runs the verification driver. Returns 0 when every check passes, 1 when a
// mathematical property fails, 2 on usage errors. All report lines go to out.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

} // namespace k4

#endif
