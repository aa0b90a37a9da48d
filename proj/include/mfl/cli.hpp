#pragma once

#include <ostream>

namespace mfl {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// Largest n the ideal oracle accepts from the command line.
inline constexpr int kOracleBound = 7;
// Largest n for the inductive T construction and Z listings.
inline constexpr int kCombinatorialBound = 10;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mfl
