#ifndef GEVREY_CLI_HPP
#define GEVREY_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gevrey {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Results go to `out`
/// unless --out names a file; diagnostics and timings go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args);

}  // namespace gevrey

#endif  // GEVREY_CLI_HPP
