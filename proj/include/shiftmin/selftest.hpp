#pragma once

#include "shiftmin/range_min.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace shiftmin {

using ArgminFunction = std::function<Index(ShiftedSequence const&, IndexRange)>;

struct SelftestConfig {
    int bits_max = 8;
    std::uint64_t seed = 1;
    // Random cases per word size in the randomized suite (B = 32 and 64).
    std::uint64_t random_cases = 10000;
    Wide max_random_width = Wide{1} << 12;
    Wide oracle_cap = kDefaultOracleCap;
    unsigned threads = 0; // 0: hardware concurrency
};

struct SuiteCount {
    int bits;
    std::uint64_t cases = 0;
    std::uint64_t mismatches = 0;
};

struct SelftestReport {
    std::vector<SuiteCount> exhaustive; // B = 1 .. bits_max
    std::vector<SuiteCount> randomized; // B = 32, 64

    std::uint64_t exhaustive_cases() const;
    std::uint64_t total_mismatches() const;
    bool passed() const { return total_mismatches() == 0; }
};

// All shifts and all ranges 0 <= a < b <= 2^B, compared against a running
// minimum over b. Sharded by shift across threads; the result does not
// depend on the thread count.
SuiteCount exhaustive_equivalence(WordSize word, ArgminFunction const& fast, unsigned threads = 0);

// Random (a, width, shift) compared against brute_force_argmin.
SuiteCount randomized_equivalence(WordSize word, std::uint64_t cases, Wide max_width, std::uint64_t seed,
                                  Wide oracle_cap, ArgminFunction const& fast);

SelftestReport run_selftest(SelftestConfig const& config, ArgminFunction const& fast = shifted_range_argmin);

// Number of (range, shift) pairs at word size B: 2^B (2^B + 1) / 2 * 2^B.
Wide exhaustive_case_count(int bits);

unsigned resolve_threads(unsigned requested);

} // namespace shiftmin
