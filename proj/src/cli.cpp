#include "shiftmin/cli.hpp"

#include "shiftmin/adaptive.hpp"
#include "shiftmin/bench.hpp"
#include "shiftmin/range_min.hpp"
#include "shiftmin/rr_hierarchy.hpp"
#include "shiftmin/selftest.hpp"
#include "shiftmin/shift_tile.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace shiftmin::cli {

namespace {

// Bad flag values; reported with exit code 2.
class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Decimal, or "2^k".
Wide parse_number(std::string const& text, char const* flag)
{
    auto fail = [&] { return UsageError(std::string("invalid value for ") + flag + ": '" + text + "'"); };
    if (text.empty())
        throw fail();
    if (auto caret = text.find('^'); caret != std::string::npos) {
        if (text.substr(0, caret) != "2")
            throw fail();
        Wide const exponent = parse_number(text.substr(caret + 1), flag);
        if (exponent > 64)
            throw fail();
        return bit(static_cast<int>(exponent));
    }
    Wide value = 0;
    for (char c : text) {
        if (c < '0' || c > '9')
            throw fail();
        value = value * 10 + static_cast<unsigned>(c - '0');
        if (value > bit(64))
            throw fail();
    }
    return value;
}

WordSize word_from_flag(int bits)
{
    if (bits < 1 || bits > 64)
        throw UsageError("--bits must be in [1, 64]");
    return WordSize(bits);
}

Index index_flag(std::string const& text, char const* flag, WordSize word)
{
    Wide const v = parse_number(text, flag);
    if (!word.holds(v))
        throw UsageError(std::string(flag) + " must be below 2^" + std::to_string(word.bits()));
    return static_cast<Index>(v);
}

IndexRange range_flags(std::string const& a, std::string const& b, WordSize word)
{
    Wide const begin = parse_number(a, "--a");
    Wide const end = parse_number(b, "--b");
    if (end <= begin)
        throw UsageError("range [--a, --b) is empty");
    if (end > word.count())
        throw UsageError("--b must not exceed 2^" + std::to_string(word.bits()));
    return {static_cast<Index>(begin), end};
}

Wide oracle_cap_from_env()
{
    char const* env = std::getenv("QMC_SELFTEST_CAP");
    if (env == nullptr || *env == '\0')
        return kDefaultOracleCap;
    return parse_number(env, "QMC_SELFTEST_CAP");
}

struct QueryFlags {
    std::string a;
    std::string b;
    std::string shift;
    int bits = 0;
    std::optional<std::uint64_t> sample_n;
    bool oracle = false;
    bool stats = false;
};

void add_query_flags(CLI::App* cmd, QueryFlags& q)
{
    cmd->add_option("--a", q.a, "Range start (inclusive)")->required();
    cmd->add_option("--b", q.b, "Range end (exclusive), at most 2^bits")->required();
    cmd->add_option("--shift", q.shift, "Shift mantissa r, the shift is r / 2^bits")->required();
    cmd->add_option("--bits", q.bits, "Word size B")->required();
    cmd->add_option("--sample-n", q.sample_n, "Rotate further by the golden-ratio lattice point n");
    cmd->add_flag("--oracle", q.oracle, "Cross-check against the linear scan");
}

ShiftedSequence query_sequence(QueryFlags const& q, WordSize word)
{
    ShiftedSequence seq(index_flag(q.shift, "--shift", word), word);
    if (q.sample_n)
        seq = composite_sequence(seq, LatticeConfig::golden(word), *q.sample_n);
    return seq;
}

int cmd_rinv(std::string const& i, int bits, bool inverse, std::ostream& out)
{
    WordSize const word = word_from_flag(bits);
    Index const v = index_flag(i, "--i", word);
    if (inverse)
        out << radical_inverse_inv(UnitFixed(v, word)) << '\n';
    else
        out << radical_inverse(v, word).to_string() << '\n';
    return kExitOk;
}

int cmd_query(QueryFlags const& q, bool print_index, std::ostream& out, std::ostream& err)
{
    WordSize const word = word_from_flag(q.bits);
    IndexRange const range = range_flags(q.a, q.b, word);
    ShiftedSequence const seq = query_sequence(q, word);

    auto const counted = shifted_range_argmin_counted(seq, range);
    Index const k = counted.index;
    if (print_index)
        out << "k=" << k << ' ';
    out << "v=" << seq.value(k).to_string() << '\n';
    if (q.stats)
        out << "bit_ops=" << counted.bit_ops << '\n';
    if (q.oracle) {
        Index const expected = brute_force_argmin(seq, range, oracle_cap_from_env());
        if (expected != k) {
            err << "oracle mismatch: fast k=" << k << ", linear scan k=" << expected << '\n';
            return kExitMismatch;
        }
        out << "oracle=agree\n";
    }
    return kExitOk;
}

struct SelftestFlags {
    int bits_max = 8;
    std::uint64_t seed = 1;
    std::uint64_t random = 10000;
    std::string max_width = "2^12";
    unsigned threads = 0;
};

int cmd_selftest(SelftestFlags const& f, std::ostream& out)
{
    if (f.bits_max < 1 || f.bits_max > 12)
        throw UsageError("--bits-max must be in [1, 12]");
    SelftestConfig config;
    config.bits_max = f.bits_max;
    config.seed = f.seed;
    config.random_cases = f.random;
    config.max_random_width = parse_number(f.max_width, "--max-width");
    if (config.max_random_width == 0)
        throw UsageError("--max-width must be positive");
    config.oracle_cap = oracle_cap_from_env();
    config.threads = f.threads;

    auto const report = run_selftest(config);
    for (auto const& s : report.exhaustive)
        out << "exhaustive B=" << s.bits << " cases=" << s.cases << " mismatches=" << s.mismatches << '\n';
    out << "exhaustive total cases=" << report.exhaustive_cases() << '\n';
    for (auto const& s : report.randomized)
        out << "random B=" << s.bits << " cases=" << s.cases << " mismatches=" << s.mismatches << '\n';
    out << (report.passed() ? "PASS" : "FAIL") << '\n';
    return report.passed() ? kExitOk : kExitMismatch;
}

struct TraverseFlags {
    std::string probs;
    std::string shift;
    std::optional<int> bits;
    bool oracle = false;
    bool stats = false;
    bool verify_culls = false;
};

int cmd_traverse(TraverseFlags const& f, std::ostream& out, std::ostream& err)
{
    auto const profile = AcceptanceProfile::load(f.probs);
    WordSize const word = profile.word();
    if (f.bits && *f.bits != word.bits())
        throw UsageError("--bits " + std::to_string(*f.bits) + " does not match the probability file (" +
                         std::to_string(word.bits()) + " bits)");
    ShiftedSequence const seq(index_flag(f.shift, "--shift", word), word);

    auto const result = hierarchical_cull(seq, profile, CullOptions{f.verify_culls});
    for (auto leaf : result.accepted)
        out << leaf << '\n';
    if (f.stats) {
        auto const& s = result.stats;
        out << "nodes_visited=" << s.nodes_visited << " range_min_calls=" << s.range_min_calls
            << " leaves_tested=" << s.leaves_tested << " accepted=" << s.accepted << '\n';
    }
    if (f.oracle && linear_cull(seq, profile) != result.accepted) {
        err << "oracle mismatch: hierarchical and linear culling disagree\n";
        return kExitMismatch;
    }
    return kExitOk;
}

struct EmitFlags {
    std::string count;
    std::string shift;
    int bits = 0;
    std::optional<std::uint64_t> lattice_n;
    std::string out;
};

void write_csv(ShiftedSequence const& seq, Index count, std::ostream& csv)
{
    csv << "i,mantissa\n";
    for (Index i = 0; i < count; ++i)
        csv << i << ',' << seq.value(i).mantissa() << '\n';
}

int cmd_emit(EmitFlags const& f, std::ostream& out)
{
    WordSize const word = word_from_flag(f.bits);
    Wide const count = parse_number(f.count, "--count");
    if (count == 0 || count > word.count())
        throw UsageError("--count must be in [1, 2^" + std::to_string(word.bits()) + "]");
    ShiftedSequence seq(index_flag(f.shift, "--shift", word), word);
    if (f.lattice_n)
        seq = composite_sequence(seq, LatticeConfig::golden(word), *f.lattice_n);

    if (f.out == "-") {
        write_csv(seq, static_cast<Index>(count), out);
        return kExitOk;
    }
    std::ofstream file(f.out, std::ios::binary);
    if (!file)
        throw UsageError("cannot write " + f.out);
    write_csv(seq, static_cast<Index>(count), file);
    return kExitOk;
}

struct BenchFlags {
    int bits = 32;
    std::string widths = "2^10,2^20";
    std::uint64_t reps = 1000;
    std::uint64_t oracle_reps = 0;
    std::uint64_t seed = 1;
};

int cmd_bench(BenchFlags const& f, std::ostream& out)
{
    WordSize const word = word_from_flag(f.bits);
    if (f.reps == 0)
        throw UsageError("--reps must be positive");
    std::vector<Wide> widths;
    std::stringstream list(f.widths);
    for (std::string item; std::getline(list, item, ',');) {
        Wide const w = parse_number(item, "--widths");
        if (w == 0 || w > word.count())
            throw UsageError("width " + item + " outside [1, 2^" + std::to_string(word.bits()) + "]");
        widths.push_back(w);
    }
    if (widths.empty())
        throw UsageError("--widths needs at least one entry");

    auto const rows = run_bench(word.bits(), widths, f.reps, f.seed, f.oracle_reps);
    out << std::setw(22) << "width" << std::setw(16) << "fast_ns" << std::setw(16) << "oracle_ns" << '\n';
    out << std::fixed << std::setprecision(1);
    for (auto const& row : rows)
        out << std::setw(22) << to_decimal(row.width) << std::setw(16) << row.fast_ns << std::setw(16)
            << row.oracle_ns << '\n';
    return kExitOk;
}

} // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Range minima of shifted van der Corput sequences", "shiftmin"};
    app.require_subcommand(1);

    std::string rinv_i;
    int rinv_bits = 0;
    bool rinv_inverse = false;
    auto* rinv = app.add_subcommand("rinv", "Base-2 radical inverse of an index (or its inverse)");
    rinv->add_option("--i", rinv_i, "Index, or mantissa with --inverse")->required();
    rinv->add_option("--bits", rinv_bits, "Word size B")->required();
    rinv->add_flag("--inverse", rinv_inverse, "Map a mantissa back to its index");

    QueryFlags argmin_flags;
    auto* argmin = app.add_subcommand("argmin", "Index and value of the range minimum");
    add_query_flags(argmin, argmin_flags);
    argmin->add_flag("--stats", argmin_flags.stats, "Print the bit-operation count");

    QueryFlags min_flags;
    auto* min = app.add_subcommand("min", "Value of the range minimum");
    add_query_flags(min, min_flags);

    SelftestFlags selftest_flags;
    auto* selftest = app.add_subcommand("selftest", "Exhaustive and randomized oracle equivalence");
    selftest->add_option("--bits-max", selftest_flags.bits_max, "Largest exhaustively tested word size")
        ->required();
    selftest->add_option("--seed", selftest_flags.seed, "Seed of the randomized suite");
    selftest->add_option("--random", selftest_flags.random, "Random cases per word size (B = 32, 64)");
    selftest->add_option("--max-width", selftest_flags.max_width, "Largest random range width");
    selftest->add_option("--threads", selftest_flags.threads, "Worker threads, 0 = all cores");

    TraverseFlags traverse_flags;
    auto* traverse = app.add_subcommand("traverse", "Hierarchical Russian roulette over a probability file");
    traverse->add_option("--probs", traverse_flags.probs, "Probability file: 'N_l B' then N_l mantissas")
        ->required();
    traverse->add_option("--shift", traverse_flags.shift, "Shift mantissa")->required();
    traverse->add_option("--bits", traverse_flags.bits, "Word size; must match the file");
    traverse->add_flag("--oracle", traverse_flags.oracle, "Cross-check against the linear filter");
    traverse->add_flag("--stats", traverse_flags.stats, "Print traversal counters");
    traverse->add_flag("--verify-culls", traverse_flags.verify_culls, "Re-check every culled subtree");

    EmitFlags emit_flags;
    auto* emit = app.add_subcommand("emit", "Write (i, mantissa) rows of the shifted sequence as CSV");
    emit->add_option("--count", emit_flags.count, "Number of rows")->required();
    emit->add_option("--shift", emit_flags.shift, "Shift mantissa")->required();
    emit->add_option("--bits", emit_flags.bits, "Word size B")->required();
    emit->add_option("--lattice-n", emit_flags.lattice_n, "Rotate further by the golden-ratio lattice point n");
    emit->add_option("--out", emit_flags.out, "Output path, '-' for stdout")->required();

    BenchFlags bench_flags;
    auto* bench = app.add_subcommand("bench", "Fast path vs linear scan timings per range width");
    bench->add_option("--bits", bench_flags.bits, "Word size B");
    bench->add_option("--widths", bench_flags.widths, "Comma-separated widths, decimal or 2^k");
    bench->add_option("--reps", bench_flags.reps, "Queries per width");
    bench->add_option("--oracle-reps", bench_flags.oracle_reps, "Linear scan queries per width (0: same as --reps)");
    bench->add_option("--seed", bench_flags.seed, "Query seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
        out << app.help();
        return kExitOk;
    } catch (CLI::ParseError const& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (rinv->parsed())
            return cmd_rinv(rinv_i, rinv_bits, rinv_inverse, out);
        if (argmin->parsed())
            return cmd_query(argmin_flags, true, out, err);
        if (min->parsed())
            return cmd_query(min_flags, false, out, err);
        if (selftest->parsed())
            return cmd_selftest(selftest_flags, out);
        if (traverse->parsed())
            return cmd_traverse(traverse_flags, out, err);
        if (emit->parsed())
            return cmd_emit(emit_flags, out);
        if (bench->parsed())
            return cmd_bench(bench_flags, out);
    } catch (UsageError const& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (ParseError const& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (std::logic_error const& e) {
        // Precondition failures from the library (ranges, word sizes).
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace shiftmin::cli
