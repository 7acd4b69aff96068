#ifndef EDGEKEEP_APP_COMMANDS_HPP
#define EDGEKEEP_APP_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace edgekeep::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitInvalid = 2;

/// Entry point for `edgekeep <command> [flags]`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edgekeep::app

#endif  // EDGEKEEP_APP_COMMANDS_HPP
