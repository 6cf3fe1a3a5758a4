#ifndef KW4_CLI_HPP
#define KW4_CLI_HPP

#include <iosfwd>

namespace kw4 {

/// Full command-line front end, runnable in-process for testing.
/// Exit codes: 0 success, 2 input error, 3 domain-precondition error,
/// 4 verification failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kw4

#endif
