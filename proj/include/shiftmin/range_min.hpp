#pragma once

#include "shiftmin/qmc_core.hpp"

#include <cstdint>

namespace shiftmin {

// Half-open index interval [begin, end). end may equal 2^64 for B = 64.
struct IndexRange {
    Index begin;
    Wide end;

    bool contains(Wide k) const noexcept { return k >= begin && k < end; }
    Wide width() const noexcept { return end - begin; }

    friend bool operator==(IndexRange const&, IndexRange const&) = default;
};

// Throws std::invalid_argument for an empty range and std::out_of_range for
// a range reaching past 2^B.
void check_range(IndexRange range, WordSize word);

// Index in range with the most trailing zeros, i.e. the argmin of the
// unshifted radical inverse. O(B).
Index min_trailing_zeros_index(IndexRange range, WordSize word);

// Argmin of the shifted sequence over range. Unique because the sequence is a
// bijection on [0, 2^B). O(B).
Index shifted_range_argmin(ShiftedSequence const& seq, IndexRange range);

UnitFixed shifted_range_min(ShiftedSequence const& seq, IndexRange range);

// Greedy upward search over the runs of ones of m at or above bit i: adding
// 2^j at the head j of a run yields the next integer with the same low j
// bits and bit j clear. A jump is kept only if it lands in range. The result
// keeps the low i bits of m, is never below m, and each kept jump lowers the
// radical inverse.
Wide refine(Wide m, int i, IndexRange range, WordSize word);

// Argmin plus the number of primitive bit operations spent (one per
// find-first/last-set and one per loop step of the sweeps and of refine).
struct CountedArgmin {
    Index index;
    std::uint64_t bit_ops;
};

CountedArgmin shifted_range_argmin_counted(ShiftedSequence const& seq, IndexRange range);

// Largest range width the linear-scan oracle accepts by default.
inline constexpr Wide kDefaultOracleCap = Wide{1} << 24;

// Linear scan; the ground truth for the fast path. Throws std::length_error
// when the range is wider than cap.
Index brute_force_argmin(ShiftedSequence const& seq, IndexRange range, Wide cap = kDefaultOracleCap);

} // namespace shiftmin
