#ifndef SPOS_CLI_HPP_
#define SPOS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace spos::cli {

  // Exit codes: 0 success or property holds, 1 property fails or a theorem
  // check reports a violation, 2 usage or input error.
  enum Exit : int { ok = 0, fails = 1, error = 2 };

  // `args` excludes the program name.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace spos::cli

#endif  // SPOS_CLI_HPP_
