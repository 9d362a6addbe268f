#pragma once

#include <iosfwd>

namespace modgrob::cli {

/// Exit codes: 0 success or acceptance, 1 verified mismatch or rejection,
/// 2 usage, parse, or resource errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace modgrob::cli
