#pragma once

#include "shiftmin/bits.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace shiftmin {

// Number of bits B in indices and fixed-point mantissas, 1 <= B <= 64.
class WordSize {
public:
    explicit WordSize(int bits);

    int bits() const noexcept { return bits_; }

    // 2^B, the number of representable indices.
    Wide count() const noexcept { return bit(bits_); }

    std::uint64_t mask() const noexcept { return static_cast<std::uint64_t>(count() - 1); }

    bool holds(Wide value) const noexcept { return value < count(); }

    friend bool operator==(WordSize, WordSize) = default;

private:
    int bits_;
};

// Exact B-bit fraction mantissa / 2^B in [0, 1).
class UnitFixed {
public:
    // Throws std::out_of_range when mantissa >= 2^B.
    UnitFixed(std::uint64_t mantissa, WordSize word);

    static UnitFixed zero(WordSize word) { return {0, word}; }

    // Truncates toward zero; x must lie in [0, 1).
    static UnitFixed from_double(double x, WordSize word);

    std::uint64_t mantissa() const noexcept { return mantissa_; }
    WordSize word() const noexcept { return word_; }

    double to_double() const noexcept;

    // "m/2^B" with the denominator written out in decimal, e.g. "26/64".
    std::string to_string() const;

    // Modular sum, (x + y) mod 1. Word sizes must agree.
    friend UnitFixed operator+(UnitFixed x, UnitFixed y);
    // 1 - x, with 1 - 0 wrapping to 0.
    UnitFixed complement() const noexcept;

    friend bool operator==(UnitFixed, UnitFixed) = default;
    // Ordering is mantissa ordering; comparing different word sizes throws.
    friend std::strong_ordering operator<=>(UnitFixed x, UnitFixed y);

private:
    std::uint64_t mantissa_;
    WordSize word_;
};

// Phi_2(i): the low B bits of i mirrored across the binary point.
UnitFixed radical_inverse(Index i, WordSize word);

// Inverse of radical_inverse. Bit reversal is an involution.
Index radical_inverse_inv(UnitFixed v) noexcept;

// The van der Corput sequence rotated by a Cranley-Patterson shift:
// value(i) = (Phi_2(i) + shift) mod 1.
class ShiftedSequence {
public:
    explicit ShiftedSequence(UnitFixed shift) : shift_(shift) {}
    ShiftedSequence(std::uint64_t shift_mantissa, WordSize word) : shift_(shift_mantissa, word) {}

    WordSize word() const noexcept { return shift_.word(); }
    UnitFixed shift() const noexcept { return shift_; }

    UnitFixed value(Index i) const;

    // k_r, the unique index whose value is exactly 0. Absent for a zero
    // shift, where 1 - r = 1 is not representable.
    std::optional<Index> critical_index() const noexcept;

private:
    UnitFixed shift_;
};

inline UnitFixed shifted_value(ShiftedSequence const& seq, Index i) { return seq.value(i); }

inline std::optional<Index> critical_index(ShiftedSequence const& seq) noexcept
{
    return seq.critical_index();
}

} // namespace shiftmin
