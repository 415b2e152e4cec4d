#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace expdom {

enum ExitCode : int {
    kExitOk = 0,
    kExitCounterexample = 1,
    kExitUsage = 2,
    kExitParse = 3,
    kExitSizeCap = 4,
    kExitInternal = 5,
};

/// Largest order accepted by `params` (gamma_e is an exact subset search).
inline constexpr int kMaxParamsOrder = 20;

/// Entry point of the `expdom` tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);
/// Same, with `args` excluding the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace expdom
