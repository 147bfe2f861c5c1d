#pragma once

// Reference implementations for the tests. Deliberately naive and written
// from the definitions, independent of the bit tricks under test.

#include "shiftmin/bits.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using shiftmin::Index;
using shiftmin::Wide;

// sum_k a_k(i) 2^(B-1-k) over the binary digits a_k of i.
inline std::uint64_t radical_inverse(std::uint64_t i, int bits)
{
    std::uint64_t out = 0;
    for (int k = 0; k < bits; ++k) {
        std::uint64_t const digit = (i >> k) & 1;
        out += digit << (bits - 1 - k);
    }
    return out;
}

inline std::uint64_t shifted(std::uint64_t i, std::uint64_t shift, int bits)
{
    Wide const mod = Wide{1} << bits;
    return static_cast<std::uint64_t>((Wide{radical_inverse(i, bits)} + shift) % mod);
}

inline Index argmin(std::uint64_t shift, Index a, Wide b, int bits)
{
    Index best = a;
    for (Wide i = a; i < b; ++i)
        if (shifted(static_cast<Index>(i), shift, bits) < shifted(best, shift, bits))
            best = static_cast<Index>(i);
    return best;
}

inline int trailing_zeros(Index i)
{
    if (i == 0)
        return 64;
    int n = 0;
    while ((i & 1) == 0) {
        i >>= 1;
        ++n;
    }
    return n;
}

inline std::vector<std::size_t> accept(std::vector<std::uint64_t> const& p, std::uint64_t shift, int bits)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (shifted(i, shift, bits) < p[i])
            out.push_back(i);
    return out;
}

} // namespace oracle
