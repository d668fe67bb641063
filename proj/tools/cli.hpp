#ifndef ORDMON_TOOLS_CLI_HPP_
#define ORDMON_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace ordmon::cli {

  enum ExitCode : int { ok = 0, refuted = 1, usage = 2 };

  //! Runs one command line (without the program name). Normal output goes
  //! to \p out, diagnostics to \p err.
  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ordmon::cli

#endif  // ORDMON_TOOLS_CLI_HPP_
