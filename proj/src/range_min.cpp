#include "shiftmin/range_min.hpp"

#include <stdexcept>

namespace shiftmin {

namespace {

struct NoCount {
    void operator()() noexcept {}
};

struct OpCount {
    std::uint64_t ops = 0;
    void operator()() noexcept { ++ops; }
};

template <class Count>
int last_set(Wide x, Count& count)
{
    count();
    return *find_last_set(x);
}

template <class Count>
Wide refine_impl(Wide m, int i, IndexRange range, int word_bits, Count& count)
{
    count();
    auto head = find_first_set(clear_prefix(m, i));
    while (head && *head < word_bits - 1) {
        count();
        Wide const k = m + bit(*head);
        // Later jumps start from higher heads and only land further up.
        if (k >= range.end)
            break;
        if (k >= range.begin)
            m = k;
        head = find_first_set(clear_prefix(m, *head + 1));
    }
    return m;
}

// Smallest value >= a whose bits [0, i] match those of m, given that the bits
// of m above i already equal those of a.
constexpr Wide lift(Wide m, int i, Wide a) noexcept
{
    return m < a ? m + bit(i + 1) : m;
}

template <class Count>
Index trailing_zeros_impl(IndexRange range, Count& count)
{
    Wide const a = range.begin;
    Wide const b = range.end;
    if (a == 0 || a == b - 1)
        return range.begin;

    int const b_h = last_set(b, count);
    count();
    int const b_l = *find_first_set(a);

    Wide k = a;
    Wide m = a;
    for (int i = b_l; i < b_h; ++i) {
        count();
        m = set_bit(clear_bit(m, i), i + 1);
        if (range.contains(m))
            k = m;
    }
    return static_cast<Index>(k);
}

template <class Count>
Index shifted_argmin_impl(ShiftedSequence const& seq, IndexRange range, Count& count)
{
    auto const critical = seq.critical_index();
    if (!critical)
        return trailing_zeros_impl(range, count);

    Wide const k_r = *critical;
    if (range.contains(k_r))
        return *critical;

    Wide const a = range.begin;
    Wide const b = range.end;
    int const word_bits = seq.word().bits();

    int const b_h = last_set(b, count);
    count();
    auto const run = *lowest_set_run(k_r);
    int const k_p = run.low;

    // Left-to-right: keep the longest low prefix of k_r and turn its highest
    // feasible zero bit into a one. Above the sweep position m carries the
    // bits of a so candidates do not fall below the range.
    Wide m = keep_prefix(k_r, b_h + 1);
    for (int i = b_h; i >= k_p; --i) {
        count();
        if (is_set(m, i)) {
            m = clear_bit(m, i);
        } else {
            Wide const m_i = lift(set_bit(m, i), i, a);
            if (m_i < b)
                return static_cast<Index>(refine_impl(m_i, i + 1, range, word_bits, count));
        }
        if (is_set(a, i))
            m = set_bit(m, i);
    }

    // Right-to-left: candidates whose lowest set bit lies below k_p still
    // exceed 1 - r; past k_p this is the trailing-zeros search.
    m = a;
    Wide pending = b;
    int pending_bit = 0;
    for (int i = 0; i < word_bits; ++i) {
        count();
        if (i == k_p) {
            if (pending < b)
                return static_cast<Index>(refine_impl(pending, pending_bit + 1, range, word_bits, count));
            // No value in (0, r). Zero has the smallest radical inverse and
            // the sweep below never produces it.
            if (a == 0)
                return 0;
        }
        if (i > 0)
            m = clear_bit(m, i - 1);
        m = set_bit(m, i);
        Wide const m_i = lift(m, i, a);
        if (m_i < b) {
            pending = m_i;
            pending_bit = i;
        }
    }
    // Most trailing zeros; that element is unique, so refine leaves it alone.
    return static_cast<Index>(pending);
}

} // namespace

void check_range(IndexRange range, WordSize word)
{
    if (range.end <= range.begin)
        throw std::invalid_argument("empty index range [" + std::to_string(range.begin) + ", " +
                                    to_decimal(range.end) + ")");
    if (range.end > word.count())
        throw std::out_of_range("index range end " + to_decimal(range.end) + " exceeds 2^" +
                                std::to_string(word.bits()));
}

Index min_trailing_zeros_index(IndexRange range, WordSize word)
{
    check_range(range, word);
    NoCount count;
    return trailing_zeros_impl(range, count);
}

Index shifted_range_argmin(ShiftedSequence const& seq, IndexRange range)
{
    check_range(range, seq.word());
    NoCount count;
    return shifted_argmin_impl(seq, range, count);
}

UnitFixed shifted_range_min(ShiftedSequence const& seq, IndexRange range)
{
    return seq.value(shifted_range_argmin(seq, range));
}

Wide refine(Wide m, int i, IndexRange range, WordSize word)
{
    NoCount count;
    return refine_impl(m, i, range, word.bits(), count);
}

CountedArgmin shifted_range_argmin_counted(ShiftedSequence const& seq, IndexRange range)
{
    check_range(range, seq.word());
    OpCount count;
    Index const k = shifted_argmin_impl(seq, range, count);
    return {k, count.ops};
}

Index brute_force_argmin(ShiftedSequence const& seq, IndexRange range, Wide cap)
{
    check_range(range, seq.word());
    if (range.width() > cap)
        throw std::length_error("range width " + to_decimal(range.width()) + " exceeds oracle cap " +
                                to_decimal(cap));
    int const bits = seq.word().bits();
    std::uint64_t const mask = seq.word().mask();
    std::uint64_t const shift = seq.shift().mantissa();
    Index best = range.begin;
    std::uint64_t best_value = (reverse_bits(best, bits) + shift) & mask;
    for (Wide i = Wide{range.begin} + 1; i < range.end; ++i) {
        auto const index = static_cast<Index>(i);
        std::uint64_t const v = (reverse_bits(index, bits) + shift) & mask;
        if (v < best_value) {
            best = index;
            best_value = v;
        }
    }
    return best;
}

} // namespace shiftmin
