#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>

namespace shiftmin {

// Sequence indices and mantissas. Bit 0 is the least significant bit.
using Index = std::uint64_t;

// Wide enough to hold 2^64 (the exclusive end of a full 64-bit range) and
// the transient carries of the sweeps (m + 2^i, set bit B).
__extension__ typedef unsigned __int128 Wide;

inline constexpr int kWideBits = 128;

// Position of the lowest set bit, or nullopt for zero.
constexpr std::optional<int> find_first_set(Wide x) noexcept
{
    if (x == 0)
        return std::nullopt;
    auto const lo = static_cast<std::uint64_t>(x);
    if (lo != 0)
        return std::countr_zero(lo);
    return 64 + std::countr_zero(static_cast<std::uint64_t>(x >> 64));
}

// Position of the highest set bit, or nullopt for zero.
constexpr std::optional<int> find_last_set(Wide x) noexcept
{
    if (x == 0)
        return std::nullopt;
    auto const hi = static_cast<std::uint64_t>(x >> 64);
    if (hi != 0)
        return 127 - std::countl_zero(hi);
    return 63 - std::countl_zero(static_cast<std::uint64_t>(x));
}

constexpr Wide bit(int i) noexcept { return Wide{1} << i; }

constexpr bool is_set(Wide x, int i) noexcept { return ((x >> i) & 1) != 0; }

constexpr Wide set_bit(Wide x, int i) noexcept { return x | bit(i); }

constexpr Wide clear_bit(Wide x, int i) noexcept { return x & ~bit(i); }

// Clears bits [0, i).
constexpr Wide clear_prefix(Wide x, int i) noexcept
{
    return i >= kWideBits ? Wide{0} : (x >> i) << i;
}

// Keeps bits [0, i).
constexpr Wide keep_prefix(Wide x, int i) noexcept
{
    return i >= kWideBits ? x : x & (bit(i) - 1);
}

// Mirrors the low `bits` bits of x; bits above are discarded.
constexpr std::uint64_t reverse_bits(std::uint64_t x, int bits) noexcept
{
    if (bits == 0)
        return 0;
    x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
    x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
    x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
    x = ((x >> 8) & 0x00FF00FF00FF00FFULL) | ((x & 0x00FF00FF00FF00FFULL) << 8);
    x = ((x >> 16) & 0x0000FFFF0000FFFFULL) | ((x & 0x0000FFFF0000FFFFULL) << 16);
    x = (x >> 32) | (x << 32);
    return x >> (64 - bits);
}

// Lowest contiguous run of ones: bits [low, high] are set, bit low-1 (if any)
// is clear and bit high+1 is clear.
struct BitRun {
    int low;
    int high;
};

constexpr std::optional<BitRun> lowest_set_run(Wide x) noexcept
{
    auto const low = find_first_set(x);
    if (!low)
        return std::nullopt;
    int high = *low;
    while (high + 1 < kWideBits && is_set(x, high + 1))
        ++high;
    return BitRun{*low, high};
}

std::string to_decimal(Wide x);

} // namespace shiftmin
