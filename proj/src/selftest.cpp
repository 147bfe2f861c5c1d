#include "shiftmin/selftest.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace shiftmin {

std::uint64_t SelftestReport::exhaustive_cases() const
{
    std::uint64_t total = 0;
    for (auto const& s : exhaustive)
        total += s.cases;
    return total;
}

std::uint64_t SelftestReport::total_mismatches() const
{
    std::uint64_t total = 0;
    for (auto const& s : exhaustive)
        total += s.mismatches;
    for (auto const& s : randomized)
        total += s.mismatches;
    return total;
}

unsigned resolve_threads(unsigned requested)
{
    if (requested != 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

Wide exhaustive_case_count(int bits)
{
    Wide const n = bit(bits);
    return n * (n + 1) / 2 * n;
}

SuiteCount exhaustive_equivalence(WordSize word, ArgminFunction const& fast, unsigned threads)
{
    std::uint64_t const n = static_cast<std::uint64_t>(word.count());
    unsigned const workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), n));
    std::vector<SuiteCount> shards(workers, SuiteCount{word.bits()});

    auto run_shard = [&](unsigned shard) {
        auto& out = shards[shard];
        for (std::uint64_t r = shard; r < n; r += workers) {
            ShiftedSequence const seq(r, word);
            for (std::uint64_t a = 0; a < n; ++a) {
                Index best = a;
                std::uint64_t best_value = seq.value(a).mantissa();
                for (std::uint64_t last = a; last < n; ++last) {
                    auto const v = seq.value(last).mantissa();
                    if (v < best_value) {
                        best = last;
                        best_value = v;
                    }
                    ++out.cases;
                    if (fast(seq, IndexRange{a, Wide{last} + 1}) != best)
                        ++out.mismatches;
                }
            }
        }
    };

    std::vector<std::jthread> pool;
    for (unsigned s = 1; s < workers; ++s)
        pool.emplace_back(run_shard, s);
    run_shard(0);
    pool.clear();

    SuiteCount total{word.bits()};
    for (auto const& s : shards) {
        total.cases += s.cases;
        total.mismatches += s.mismatches;
    }
    return total;
}

SuiteCount randomized_equivalence(WordSize word, std::uint64_t cases, Wide max_width, std::uint64_t seed,
                                  Wide oracle_cap, ArgminFunction const& fast)
{
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(word.bits())));
    SuiteCount out{word.bits()};
    Wide const width_limit = std::min(max_width, oracle_cap);
    for (std::uint64_t c = 0; c < cases; ++c) {
        Index const a = rng() & word.mask();
        Wide const width = 1 + static_cast<Wide>(rng()) % width_limit;
        Wide const b = std::min(Wide{a} + width, word.count());
        ShiftedSequence const seq(rng() & word.mask(), word);
        IndexRange const range{a, b};
        ++out.cases;
        if (fast(seq, range) != brute_force_argmin(seq, range, oracle_cap))
            ++out.mismatches;
    }
    return out;
}

SelftestReport run_selftest(SelftestConfig const& config, ArgminFunction const& fast)
{
    SelftestReport report;
    for (int bits = 1; bits <= config.bits_max; ++bits)
        report.exhaustive.push_back(exhaustive_equivalence(WordSize(bits), fast, config.threads));
    for (int bits : {32, 64})
        report.randomized.push_back(randomized_equivalence(WordSize(bits), config.random_cases,
                                                           config.max_random_width, config.seed,
                                                           config.oracle_cap, fast));
    return report;
}

} // namespace shiftmin
