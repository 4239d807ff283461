#pragma once

#include <chrono>
#include <vector>

#include "padic_solve/counting.hpp"
#include "padic_solve/ints.hpp"

namespace padic_solve {

// Default cap on brute-force window size; overridable per call.
inline constexpr u64 kDefaultScanCeiling = 10'000'000;

struct ScanResult {
    ProblemInstance instance;
    std::vector<u64> solutions;
    std::chrono::duration<double> elapsed;
    u64 candidates_scanned;
};

// Exhaustive scan of [0, m*p^e); open cases are scanned too. threads > 1
// partitions the window into contiguous ranges; the merged output is
// identical to a serial run.
ScanResult brute_force(const ProblemInstance& inst,
                       u64 ceiling = kDefaultScanCeiling,
                       unsigned threads = 1);

// Verifies f(x) = f(x + m*p^e) (mod p^e) on `samples` deterministic
// pseudo-random x, evaluating both sides with exact unreduced exponents.
// Returns false on any mismatch.
bool check_periodicity(const ProblemInstance& inst, u64 samples);

} // namespace padic_solve
