#ifndef CARLITZ_CLI_HPP
#define CARLITZ_CLI_HPP

/// Command-line surface over all modules.
///
/// Exit codes: 0 success, 1 domain error (a named precondition was violated),
/// 2 parse or usage error, 3 a verify run completed but its match flag is
/// false.  Errors never print partial results: output is buffered and only
/// flushed on success.

#include <iosfwd>
#include <string>
#include <vector>

namespace carlitz {

/// Run one command.  args holds the arguments in natural order, without the
/// program name.  Normal output goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace carlitz

#endif
