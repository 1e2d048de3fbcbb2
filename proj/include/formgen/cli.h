#ifndef FORMGEN_CLI_H_
#define FORMGEN_CLI_H_

#include <iosfwd>
#include <span>
#include <string>

namespace formgen::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. `args` excludes the program name. Results go to `out`
// (JSON, or TSV for augment), diagnostics to `err`. Returns kExitOk,
// kExitValidation for bad data or I/O failures, kExitUsage for bad command
// lines.
int Run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace formgen::cli

#endif  // FORMGEN_CLI_H_
