#include "shiftmin/bench.hpp"

#include "shiftmin/range_min.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

namespace shiftmin {

namespace {

// Keeps the timed calls observable.
volatile std::uint64_t bench_sink = 0;

struct Query {
    ShiftedSequence seq;
    IndexRange range;
};

template <class F>
double mean_ns(std::vector<Query> const& queries, std::size_t count, F&& argmin, std::uint64_t& sink)
{
    auto const start = std::chrono::steady_clock::now();
    for (std::size_t k = 0; k < count; ++k)
        sink += argmin(queries[k].seq, queries[k].range);
    auto const stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::nano>(stop - start).count() / static_cast<double>(count);
}

} // namespace

std::vector<BenchRow> run_bench(int bits, std::vector<Wide> const& widths, std::uint64_t reps, std::uint64_t seed,
                                std::uint64_t oracle_reps)
{
    WordSize const word(bits);
    if (reps == 0)
        throw std::invalid_argument("reps must be positive");
    if (widths.empty())
        throw std::invalid_argument("at least one width required");

    std::size_t const oracle_count = static_cast<std::size_t>(oracle_reps == 0 ? reps : std::min(oracle_reps, reps));

    std::vector<BenchRow> rows;
    std::uint64_t sink = 0;
    std::mt19937_64 rng(seed);
    for (Wide width : widths) {
        if (width == 0 || width > word.count())
            throw std::invalid_argument("width " + to_decimal(width) + " outside [1, 2^" + std::to_string(bits) +
                                        "]");
        Wide const starts = word.count() - width + 1;
        std::vector<Query> queries;
        queries.reserve(reps);
        for (std::uint64_t k = 0; k < reps; ++k) {
            Index const a = static_cast<Index>(static_cast<Wide>(rng()) % starts);
            queries.push_back({ShiftedSequence(rng() & word.mask(), word), IndexRange{a, Wide{a} + width}});
        }
        auto const fast_fn = [](auto const& s, auto const& r) { return shifted_range_argmin(s, r); };
        auto const oracle_fn = [width](auto const& s, auto const& r) { return brute_force_argmin(s, r, width); };
        mean_ns(queries, queries.size(), fast_fn, sink); // warm-up
        double const fast = mean_ns(queries, queries.size(), fast_fn, sink);
        double const oracle = mean_ns(queries, oracle_count, oracle_fn, sink);
        rows.push_back({width, fast, oracle});
    }
    bench_sink = sink;
    return rows;
}

} // namespace shiftmin
