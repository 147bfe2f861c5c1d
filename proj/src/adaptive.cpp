#include "shiftmin/adaptive.hpp"

#include <stdexcept>

namespace shiftmin {

namespace {

// floor(2^128 * (sqrt(5) - 1) / 2)
constexpr std::uint64_t kGoldenHi = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kGoldenLo = 0xf39cc0605cedc834ULL;

} // namespace

UnitFixed golden_ratio_fraction(WordSize word)
{
    Wide const full = (Wide{kGoldenHi} << 64) | kGoldenLo;
    int const drop = kWideBits - word.bits();
    Wide const rounded = (full >> drop) + ((full >> (drop - 1)) & 1);
    // The fraction is below 1 - 2^-64, so rounding never carries into 2^B.
    return {static_cast<std::uint64_t>(rounded), word};
}

LatticeConfig LatticeConfig::golden(WordSize word)
{
    LatticeConfig cfg{UnitFixed::zero(word), golden_ratio_fraction(word)};
    check_lattice(cfg);
    return cfg;
}

void check_lattice(LatticeConfig const& cfg)
{
    if (cfg.offset.word() != cfg.step.word())
        throw std::invalid_argument("lattice offset and step use different word sizes");
    if (cfg.step.mantissa() == 0)
        throw std::invalid_argument("lattice step must be nonzero");
}

UnitFixed lattice_point(LatticeConfig const& cfg, std::uint64_t n)
{
    check_lattice(cfg);
    WordSize const word = cfg.step.word();
    // Unsigned wraparound is arithmetic mod 2^64, hence mod 2^B after masking.
    std::uint64_t const step = n * cfg.step.mantissa();
    return cfg.offset + UnitFixed(step & word.mask(), word);
}

ShiftedSequence composite_sequence(ShiftedSequence const& seq, LatticeConfig const& cfg, std::uint64_t n)
{
    return ShiftedSequence(seq.shift() + lattice_point(cfg, n));
}

SampleMin multi_sample_range_min(ShiftedSequence const& seq, LatticeConfig const& cfg, IndexRange range,
                                 std::uint64_t n)
{
    auto const rotated = composite_sequence(seq, cfg, n);
    Index const k = shifted_range_argmin(rotated, range);
    return {k, rotated.value(k)};
}

bool dyadic_offset_identity_check(std::uint64_t l, std::uint64_t n, int d, WordSize word)
{
    int const bits = word.bits();
    if (d < 0 || d > bits)
        throw std::invalid_argument("offset bit count d must lie in [0, B]");
    if (Wide{l} >= bit(d))
        throw std::invalid_argument("leaf offset l must be below 2^d");
    Wide const index = Wide{l} + (Wide{n} << d);
    if (!word.holds(index))
        throw std::invalid_argument("l + n 2^d must be below 2^B");

    std::uint64_t const lhs = radical_inverse(static_cast<Index>(index), word).mantissa();

    // Phi_2(l) over d bits occupies the top d bits of the B-bit mantissa;
    // 2^-d Phi_2(n) over B - d bits occupies the low B - d bits.
    Wide const leaf = d == 0 ? Wide{0} : Wide{radical_inverse(l, WordSize(d)).mantissa()} << (bits - d);
    Wide const within = d == bits ? Wide{0} : Wide{radical_inverse(n, WordSize(bits - d)).mantissa()};
    return Wide{lhs} == leaf + within;
}

} // namespace shiftmin
