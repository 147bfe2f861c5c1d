#include "shiftmin/qmc_core.hpp"

#include <cmath>
#include <stdexcept>

namespace shiftmin {

WordSize::WordSize(int bits) : bits_(bits)
{
    if (bits < 1 || bits > 64)
        throw std::invalid_argument("word size must be in [1, 64], got " + std::to_string(bits));
}

UnitFixed::UnitFixed(std::uint64_t mantissa, WordSize word) : mantissa_(mantissa), word_(word)
{
    if (!word.holds(mantissa))
        throw std::out_of_range("mantissa " + std::to_string(mantissa) + " does not fit in " +
                                std::to_string(word.bits()) + " bits");
}

UnitFixed UnitFixed::from_double(double x, WordSize word)
{
    if (!(x >= 0.0 && x < 1.0))
        throw std::out_of_range("fraction must lie in [0, 1)");
    // ldexp is exact; the cast truncates.
    long double const scaled = std::ldexp(static_cast<long double>(x), word.bits());
    return {static_cast<std::uint64_t>(scaled), word};
}

double UnitFixed::to_double() const noexcept
{
    return std::ldexp(static_cast<double>(mantissa_), -word_.bits());
}

std::string UnitFixed::to_string() const
{
    return std::to_string(mantissa_) + "/" + to_decimal(word_.count());
}

UnitFixed operator+(UnitFixed x, UnitFixed y)
{
    if (x.word_ != y.word_)
        throw std::invalid_argument("word size mismatch in fixed-point sum");
    return {(x.mantissa_ + y.mantissa_) & x.word_.mask(), x.word_};
}

UnitFixed UnitFixed::complement() const noexcept
{
    return {(~mantissa_ + 1) & word_.mask(), word_};
}

std::strong_ordering operator<=>(UnitFixed x, UnitFixed y)
{
    if (x.word_ != y.word_)
        throw std::invalid_argument("word size mismatch in fixed-point comparison");
    return x.mantissa_ <=> y.mantissa_;
}

UnitFixed radical_inverse(Index i, WordSize word)
{
    if (!word.holds(i))
        throw std::out_of_range("index " + std::to_string(i) + " out of range for " +
                                std::to_string(word.bits()) + " bits");
    return {reverse_bits(i, word.bits()), word};
}

Index radical_inverse_inv(UnitFixed v) noexcept
{
    return reverse_bits(v.mantissa(), v.word().bits());
}

UnitFixed ShiftedSequence::value(Index i) const
{
    return radical_inverse(i, word()) + shift_;
}

std::optional<Index> ShiftedSequence::critical_index() const noexcept
{
    if (shift_.mantissa() == 0)
        return std::nullopt;
    return radical_inverse_inv(shift_.complement());
}

} // namespace shiftmin
