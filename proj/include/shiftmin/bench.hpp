#pragma once

#include "shiftmin/bits.hpp"

#include <cstdint>
#include <vector>

namespace shiftmin {

struct BenchRow {
    Wide width;
    double fast_ns;   // mean per query
    double oracle_ns; // mean per query
};

// Times shifted_range_argmin on `reps` random (start, shift) pairs per width
// and brute_force_argmin on the first `oracle_reps` of them (0 means `reps`).
// Widths must be in [1, 2^bits]. Throws std::invalid_argument for reps == 0
// or a bad width.
std::vector<BenchRow> run_bench(int bits, std::vector<Wide> const& widths, std::uint64_t reps,
                                std::uint64_t seed = 1, std::uint64_t oracle_reps = 0);

} // namespace shiftmin
