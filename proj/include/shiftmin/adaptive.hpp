#pragma once

#include "shiftmin/qmc_core.hpp"
#include "shiftmin/range_min.hpp"

#include <cstdint>

namespace shiftmin {

// Fractional part of the golden ratio, (sqrt(5) - 1) / 2, rounded to B bits.
UnitFixed golden_ratio_fraction(WordSize word);

// Rank-1 lattice psi(n) = (offset + n * step) mod 1.
struct LatticeConfig {
    UnitFixed offset;
    UnitFixed step;

    // offset 0, step = golden ratio fraction. Throws if the rounded step is
    // zero (B = 1 rounds 0.618 up to 1/2, so this never happens in practice).
    static LatticeConfig golden(WordSize word);
};

// Throws std::invalid_argument for a zero step or mismatched word sizes.
void check_lattice(LatticeConfig const& cfg);

UnitFixed lattice_point(LatticeConfig const& cfg, std::uint64_t n);

// The sequence rotated additionally by psi(n): shift (r + psi(n)) mod 1.
ShiftedSequence composite_sequence(ShiftedSequence const& seq, LatticeConfig const& cfg, std::uint64_t n);

struct SampleMin {
    Index index;
    UnitFixed value;
};

SampleMin multi_sample_range_min(ShiftedSequence const& seq, LatticeConfig const& cfg, IndexRange range,
                                 std::uint64_t n);

// Checks Phi_2(l + n 2^d) == Phi_2(l) over d bits + 2^-d Phi_2(n) over B - d
// bits, in exact B-bit fixed point. Throws std::invalid_argument when
// l >= 2^d, d > B or l + n 2^d >= 2^B.
bool dyadic_offset_identity_check(std::uint64_t l, std::uint64_t n, int d, WordSize word);

} // namespace shiftmin
