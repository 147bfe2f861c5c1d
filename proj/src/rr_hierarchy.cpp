#include "shiftmin/rr_hierarchy.hpp"

#include "shiftmin/range_min.hpp"
#include "shiftmin/shift_tile.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace shiftmin {

namespace {

WordSize common_word(std::vector<UnitFixed> const& p)
{
    if (p.empty())
        throw std::invalid_argument("acceptance profile needs at least one leaf");
    WordSize const word = p.front().word();
    for (auto const& x : p)
        if (x.word() != word)
            throw std::invalid_argument("acceptance probabilities use mixed word sizes");
    if (Wide{p.size()} > word.count())
        throw std::invalid_argument(std::to_string(p.size()) + " leaves exceed 2^" + std::to_string(word.bits()) +
                                    " indices");
    return word;
}

std::size_t padded_size(std::size_t n) { return std::bit_ceil(n); }

} // namespace

AcceptanceProfile::AcceptanceProfile(WordSize word, std::vector<UnitFixed> p, std::size_t padded,
                                     std::vector<UnitFixed> bounds)
    : word_(word), p_(std::move(p)), padded_(padded), bounds_(std::move(bounds))
{
}

AcceptanceProfile AcceptanceProfile::build(std::vector<UnitFixed> p)
{
    WordSize const word = common_word(p);
    std::size_t const padded = padded_size(p.size());
    std::vector<UnitFixed> bounds(2 * padded, UnitFixed::zero(word));
    std::copy(p.begin(), p.end(), bounds.begin() + static_cast<std::ptrdiff_t>(padded));
    for (std::size_t node = padded - 1; node >= 1; --node)
        bounds[node] = std::max(bounds[2 * node], bounds[2 * node + 1]);
    return {word, std::move(p), padded, std::move(bounds)};
}

AcceptanceProfile AcceptanceProfile::with_bounds(std::vector<UnitFixed> p, std::vector<UnitFixed> node_bounds)
{
    WordSize const word = common_word(p);
    std::size_t const padded = padded_size(p.size());
    if (node_bounds.size() != 2 * padded)
        throw std::invalid_argument("expected " + std::to_string(2 * padded) + " node bounds, got " +
                                    std::to_string(node_bounds.size()));
    for (std::size_t node = 1; node < 2 * padded; ++node) {
        auto const bound = node_bounds[node];
        if (bound.word() != word)
            throw std::invalid_argument("node bound word size differs from probabilities");
        bool ok = true;
        if (node < padded)
            ok = bound >= node_bounds[2 * node] && bound >= node_bounds[2 * node + 1];
        else if (node - padded < p.size())
            ok = bound >= p[node - padded];
        if (!ok)
            throw std::invalid_argument("node bound " + std::to_string(node) + " is below a descendant");
    }
    return {word, std::move(p), padded, std::move(node_bounds)};
}

std::pair<std::size_t, std::size_t> AcceptanceProfile::node_leaves(std::size_t node) const
{
    if (node == 0 || node >= 2 * padded_)
        throw std::out_of_range("no tree node " + std::to_string(node));
    int const depth = std::bit_width(node) - 1;
    std::size_t const span = padded_ >> depth;
    std::size_t const begin = (node - (std::size_t{1} << depth)) * span;
    return {std::min(begin, p_.size()), std::min(begin + span, p_.size())};
}

AcceptanceProfile AcceptanceProfile::parse(std::istream& in)
{
    detail::TokenReader reader(in);
    auto const count = reader.next_unsigned("leaf count");
    if (count == 0)
        throw ParseError("leaf count must be positive", reader.line());
    auto const bits = reader.next_unsigned("word size");
    if (bits < 1 || bits > 64)
        throw ParseError("word size must be in [1, 64], got " + std::to_string(bits), reader.line());
    WordSize const word(static_cast<int>(bits));
    if (Wide{count} > word.count())
        throw ParseError("leaf count exceeds 2^" + std::to_string(bits), reader.line());
    auto const mantissas = detail::read_mantissas(reader, static_cast<std::size_t>(count), word);
    std::vector<UnitFixed> p;
    p.reserve(mantissas.size());
    for (auto m : mantissas)
        p.emplace_back(m, word);
    return build(std::move(p));
}

AcceptanceProfile AcceptanceProfile::load(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string(), 0);
    return parse(in);
}

void AcceptanceProfile::write(std::ostream& out) const
{
    out << p_.size() << ' ' << word_.bits() << '\n';
    for (auto const& x : p_)
        out << x.mantissa() << '\n';
}

CullResult hierarchical_cull(ShiftedSequence const& seq, AcceptanceProfile const& profile, CullOptions options)
{
    if (seq.word() != profile.word())
        throw std::invalid_argument("sequence uses " + std::to_string(seq.word().bits()) + " bits, profile uses " +
                                    std::to_string(profile.word().bits()));
    // Padded ranges must stay addressable by the sequence.
    if (Wide{profile.padded_leaves()} > seq.word().count())
        throw std::invalid_argument("padded tree exceeds the sequence word size");

    CullResult result;
    auto& stats = result.stats;
    std::size_t const padded = profile.padded_leaves();

    auto check_culled = [&](std::size_t node) {
        auto const [begin, end] = profile.node_leaves(node);
        for (std::size_t i = begin; i < end; ++i)
            if (seq.value(i) < profile.probability(i))
                throw std::logic_error("culled node " + std::to_string(node) + " holds acceptable leaf " +
                                       std::to_string(i));
    };

    std::size_t const leaves = profile.leaf_count();
    // Skips padding-only right children, so every visited internal node has
    // two non-empty subtrees and at most 2 N_l - 1 nodes are visited.
    auto descend = [&](std::size_t node) {
        while (node < padded && profile.node_leaves(2 * node + 1).first >= leaves)
            node = 2 * node;
        return node;
    };

    // Explicit stack, right child pushed first so leaves come out ascending.
    std::vector<std::size_t> stack{descend(1)};
    while (!stack.empty()) {
        std::size_t const node = stack.back();
        stack.pop_back();
        ++stats.nodes_visited;

        if (node >= padded) {
            std::size_t const leaf = node - padded;
            ++stats.leaves_tested;
            if (seq.value(leaf) < profile.probability(leaf)) {
                result.accepted.push_back(leaf);
                ++stats.accepted;
            }
            continue;
        }

        auto const bound = profile.node_max(node);
        bool culled = bound.mantissa() == 0;
        if (!culled) {
            auto const [begin, end] = profile.node_leaves(node);
            ++stats.range_min_calls;
            culled = shifted_range_min(seq, IndexRange{begin, end}) >= bound;
        }
        if (culled) {
            if (options.verify_culls)
                check_culled(node);
            continue;
        }
        stack.push_back(descend(2 * node + 1));
        stack.push_back(descend(2 * node));
    }
    return result;
}

std::vector<std::size_t> linear_cull(ShiftedSequence const& seq, AcceptanceProfile const& profile)
{
    if (seq.word() != profile.word())
        throw std::invalid_argument("sequence and profile word sizes differ");
    std::vector<std::size_t> accepted;
    auto const p = profile.probabilities();
    for (std::size_t i = 0; i < p.size(); ++i)
        if (seq.value(i) < p[i])
            accepted.push_back(i);
    return accepted;
}

} // namespace shiftmin
