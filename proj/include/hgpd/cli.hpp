#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hgpd {

// Exit codes of dispatch().
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// Runs one command line (without the program name). Normal output goes to
// out, diagnostics to err, unless --out redirects the normal output.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hgpd
