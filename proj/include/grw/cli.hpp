#ifndef GRW_CLI_HPP
#define GRW_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace grw {

/**
 * One workbench invocation.  `argv` excludes the program name; everything the
 * command prints goes to `out` as a single JSON document (help text excepted).
 *
 * Exit codes: 0 when every check in the report passes, 1 when a mathematical
 * check fails, 2 on usage or input errors.
 */
int run(const std::vector<std::string>& argv, std::ostream& out);

} // namespace grw

#endif
