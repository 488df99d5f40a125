#pragma once

#include <iosfwd>

namespace finfree::cli {

/// Exit codes: 0 success, 1 input or usage error (diagnostic JSON on err),
/// 2 when check-ffp finds the pair is not in FFP.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotFfp = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace finfree::cli
