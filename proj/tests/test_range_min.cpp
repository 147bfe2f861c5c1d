#include "oracles.hpp"
#include "shiftmin/range_min.hpp"
#include "shiftmin/selftest.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace shiftmin;

namespace {
WordSize const w6{6};
}

TEST_CASE("trailing-zeros search examples")
{
    CHECK(min_trailing_zeros_index({0, 37}, w6) == 0);
    CHECK(min_trailing_zeros_index({7, 8}, w6) == 7);
    CHECK(min_trailing_zeros_index({5, 9}, w6) == 8);
    CHECK(min_trailing_zeros_index({5, 8}, w6) == 6);
    CHECK(min_trailing_zeros_index({33, 64}, w6) == 48);
}

TEST_CASE("trailing-zeros search maximizes trailing zeros")
{
    for (int bits = 1; bits <= 10; ++bits) {
        WordSize const word(bits);
        std::uint64_t const n = std::uint64_t{1} << bits;
        for (std::uint64_t a = 0; a < n; ++a) {
            Index best = a;
            for (std::uint64_t b = a + 1; b <= n; ++b) {
                if (oracle::trailing_zeros(b - 1) > oracle::trailing_zeros(best))
                    best = b - 1;
                REQUIRE(min_trailing_zeros_index({a, b}, word) == best);
            }
        }
    }
}

TEST_CASE("shifted argmin examples")
{
    ShiftedSequence const seq(38, w6);
    CHECK(shifted_range_argmin(seq, {20, 24}) == 22);
    CHECK(shifted_range_min(seq, {20, 24}).mantissa() == 0);
    CHECK(shifted_range_argmin(seq, {5, 8}) == 5);
    CHECK(shifted_range_min(seq, {5, 8}) == UnitFixed(14, w6));
    CHECK(shifted_range_argmin(seq, {6, 8}) == 7);
    CHECK(shifted_range_min(seq, {6, 8}).mantissa() == 30);

    ShiftedSequence const unshifted(0, w6);
    CHECK(shifted_range_min(unshifted, {5, 9}).mantissa() == 4);
    CHECK(shifted_range_argmin(unshifted, {5, 8}) == 6);
}

TEST_CASE("range validation")
{
    ShiftedSequence const seq(38, w6);
    CHECK_THROWS_AS(shifted_range_argmin(seq, {5, 5}), std::invalid_argument);
    CHECK_THROWS_AS(shifted_range_argmin(seq, {9, 5}), std::invalid_argument);
    CHECK_THROWS_AS(shifted_range_argmin(seq, {0, 65}), std::out_of_range);
    CHECK_THROWS_AS(min_trailing_zeros_index({3, 3}, w6), std::invalid_argument);
    CHECK_NOTHROW(shifted_range_argmin(seq, {0, 64}));

    WordSize const w64(64);
    ShiftedSequence const wide(12345, w64);
    CHECK_NOTHROW(shifted_range_argmin(wide, {0, bit(64)}));
    CHECK_THROWS_AS(shifted_range_argmin(wide, {0, bit(64) + 1}), std::out_of_range);
}

TEST_CASE("zero shift reduces to the trailing-zeros search")
{
    for (int bits = 1; bits <= 10; ++bits) {
        WordSize const word(bits);
        ShiftedSequence const seq(0, word);
        std::uint64_t const n = std::uint64_t{1} << bits;
        for (std::uint64_t a = 0; a < n; ++a)
            for (std::uint64_t b = a + 1; b <= n; ++b)
                REQUIRE(shifted_range_argmin(seq, {a, b}) == min_trailing_zeros_index({a, b}, word));
    }
}

TEST_CASE("critical index inside the range gives value zero")
{
    for (int bits = 1; bits <= 8; ++bits) {
        WordSize const word(bits);
        std::uint64_t const n = std::uint64_t{1} << bits;
        for (std::uint64_t r = 1; r < n; ++r) {
            ShiftedSequence const seq(r, word);
            Index const k_r = *seq.critical_index();
            for (std::uint64_t a = 0; a <= k_r; ++a)
                for (std::uint64_t b = k_r + 1; b <= n; ++b)
                    REQUIRE(shifted_range_min(seq, {a, b}).mantissa() == 0);
        }
    }
}

TEST_CASE("exhaustive equivalence with the digit oracle, B <= 6")
{
    for (int bits = 1; bits <= 6; ++bits) {
        WordSize const word(bits);
        std::uint64_t const n = std::uint64_t{1} << bits;
        for (std::uint64_t r = 0; r < n; ++r) {
            ShiftedSequence const seq(r, word);
            for (std::uint64_t a = 0; a < n; ++a)
                for (std::uint64_t b = a + 1; b <= n; ++b)
                    REQUIRE(shifted_range_argmin(seq, {a, b}) == oracle::argmin(r, a, b, bits));
        }
    }
}

TEST_CASE("exhaustive equivalence via the selftest harness, B = 7, 8")
{
    for (int bits : {7, 8}) {
        auto const suite = exhaustive_equivalence(WordSize(bits), shifted_range_argmin);
        CHECK(Wide{suite.cases} == exhaustive_case_count(bits));
        CHECK(suite.mismatches == 0);
    }
}

TEST_CASE("randomized equivalence at 32 and 64 bits")
{
    std::mt19937_64 rng(99);
    for (int bits : {32, 64}) {
        WordSize const word(bits);
        for (int t = 0; t < 3000; ++t) {
            Index const a = rng() & word.mask();
            Wide const width = 1 + rng() % 4096;
            Wide const b = std::min(Wide{a} + width, word.count());
            std::uint64_t const r = rng() & word.mask();
            ShiftedSequence const seq(r, word);
            REQUIRE(shifted_range_argmin(seq, {a, b}) == oracle::argmin(r, a, b, bits));
        }
    }
}

TEST_CASE("ranges touching 2^64")
{
    WordSize const word(64);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 500; ++t) {
        Wide const width = 1 + rng() % 2048;
        Index const a = static_cast<Index>(bit(64) - width);
        std::uint64_t const r = rng();
        ShiftedSequence const seq(r, word);
        REQUIRE(shifted_range_argmin(seq, {a, bit(64)}) == oracle::argmin(r, a, bit(64), 64));
    }
}

TEST_CASE("refine examples")
{
    CHECK(refine(0b000011, 2, {0, 64}, w6) == 0b000011);
    CHECK(refine(7, 1, {8, 16}, w6) == 9);
    // Every jump from 7 keeping bit 0 either stays below 32 or passes 64.
    Wide const stuck = refine(7, 1, {32, 64}, w6);
    CHECK(stuck == 7);
    CHECK_FALSE(IndexRange{32, 64}.contains(stuck));
}

TEST_CASE("refine properties on random traces")
{
    std::mt19937_64 rng(21);
    for (int t = 0; t < 20000; ++t) {
        int const bits = 1 + static_cast<int>(rng() % 16);
        WordSize const word(bits);
        Index const a = rng() & word.mask();
        Wide const b = std::min(Wide{a} + 1 + rng() % 512, word.count());
        IndexRange const range{a, b};
        int const i = static_cast<int>(rng() % (bits + 1));
        // Start from the smallest in-range value with random low i bits.
        Wide const low = keep_prefix(rng(), i);
        Wide m = clear_prefix(a, i) | low;
        if (m < a)
            m += bit(i);
        if (m >= b)
            continue;
        Wide const out = refine(m, i, range, word);
        REQUIRE(out >= m);
        REQUIRE(keep_prefix(out, i) == keep_prefix(m, i));
        REQUIRE(range.contains(out));
        if (out != m)
            REQUIRE(oracle::radical_inverse(static_cast<Index>(out), bits) <
                    oracle::radical_inverse(static_cast<Index>(m), bits));
        // Best radical inverse among in-range values sharing the low i bits.
        std::uint64_t best = oracle::radical_inverse(static_cast<Index>(m), bits);
        for (Wide k = m; k < b; k += bit(i))
            best = std::min(best, oracle::radical_inverse(static_cast<Index>(k), bits));
        REQUIRE(oracle::radical_inverse(static_cast<Index>(out), bits) == best);
    }
}

TEST_CASE("I-set ordering: bit i+1 dominates the comparison")
{
    // Indices sharing low bits [0, i] are ordered by radical inverse exactly
    // as their next bits read upward: set 0... before 1..., then 00 before 01.
    for (int bits = 2; bits <= 10; ++bits) {
        std::uint64_t const n = std::uint64_t{1} << bits;
        for (int i = 0; i + 1 < bits; ++i) {
            for (std::uint64_t prefix = 0; prefix < (std::uint64_t{1} << (i + 1)); prefix += 3) {
                for (std::uint64_t x = prefix; x < n; x += std::uint64_t{1} << (i + 1)) {
                    for (std::uint64_t y = prefix; y < n; y += std::uint64_t{1} << (i + 1)) {
                        std::uint64_t const sx = oracle::radical_inverse(x >> (i + 1), bits - i - 1);
                        std::uint64_t const sy = oracle::radical_inverse(y >> (i + 1), bits - i - 1);
                        bool const by_suffix = sx < sy;
                        bool const by_value = oracle::radical_inverse(x, bits) < oracle::radical_inverse(y, bits);
                        REQUIRE(by_suffix == by_value);
                    }
                }
            }
        }
    }
}

TEST_CASE("bit-operation count stays linear in B")
{
    for (int bits = 1; bits <= 8; ++bits) {
        WordSize const word(bits);
        std::uint64_t const n = std::uint64_t{1} << bits;
        std::uint64_t worst = 0;
        for (std::uint64_t r = 0; r < n; ++r) {
            ShiftedSequence const seq(r, word);
            for (std::uint64_t a = 0; a < n; ++a)
                for (std::uint64_t b = a + 1; b <= n; ++b) {
                    auto const c = shifted_range_argmin_counted(seq, {a, b});
                    REQUIRE(c.index == shifted_range_argmin(seq, {a, b}));
                    worst = std::max(worst, c.bit_ops);
                }
        }
        CHECK(worst <= 16u * static_cast<unsigned>(bits));
    }
    std::mt19937_64 rng(4);
    WordSize const w64(64);
    for (int t = 0; t < 20000; ++t) {
        Index const a = rng();
        Wide const b = std::min(Wide{a} + 1 + (rng() >> (rng() % 64)), bit(64));
        ShiftedSequence const seq(rng(), w64);
        REQUIRE(shifted_range_argmin_counted(seq, {a, b}).bit_ops <= 16u * 64u);
    }
}

TEST_CASE("brute force oracle")
{
    ShiftedSequence const seq(38, w6);
    CHECK(brute_force_argmin(seq, {13, 14}) == 13);
    CHECK(brute_force_argmin(seq, {5, 8}) == 5);
    CHECK(brute_force_argmin(seq, {0, 64}) == 22);
    CHECK_THROWS_AS(brute_force_argmin(seq, {0, 64}, 63), std::length_error);
    CHECK_NOTHROW(brute_force_argmin(seq, {0, 64}, 64));
    CHECK_THROWS_AS(brute_force_argmin(seq, {4, 4}), std::invalid_argument);
    ShiftedSequence const unshifted(0, w6);
    for (std::uint64_t a = 0; a < 64; ++a)
        for (std::uint64_t b = a + 1; b <= 64; ++b)
            REQUIRE(brute_force_argmin(unshifted, {a, b}) == min_trailing_zeros_index({a, b}, w6));
}
