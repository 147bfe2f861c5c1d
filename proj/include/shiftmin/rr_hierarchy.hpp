#pragma once

#include "shiftmin/qmc_core.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace shiftmin {

// Per-leaf acceptance probabilities over an implicit complete binary tree.
// Leaves are padded with p = 0 up to the next power of two. Nodes use heap
// numbering: node 1 is the root, node k has children 2k and 2k+1, and leaf i
// is node padded_leaves() + i.
class AcceptanceProfile {
public:
    // Exact per-node maxima. Throws on an empty array, mixed word sizes or
    // more than 2^B leaves.
    static AcceptanceProfile build(std::vector<UnitFixed> p);

    // Caller-supplied conservative bounds, indexed by heap node (size
    // 2 * padded_leaves(), entry 0 unused). Each bound must dominate its
    // children and, at the leaf level, the leaf probability.
    static AcceptanceProfile with_bounds(std::vector<UnitFixed> p, std::vector<UnitFixed> node_bounds);

    WordSize word() const noexcept { return word_; }
    std::size_t leaf_count() const noexcept { return p_.size(); }
    std::size_t padded_leaves() const noexcept { return padded_; }
    std::span<UnitFixed const> probabilities() const noexcept { return p_; }

    UnitFixed probability(std::size_t leaf) const { return p_.at(leaf); }
    UnitFixed node_max(std::size_t node) const { return bounds_.at(node); }

    // Leaf span [begin, end) of a heap node, clipped to leaf_count().
    std::pair<std::size_t, std::size_t> node_leaves(std::size_t node) const;

    // Text format: "N_l B" then N_l decimal mantissas.
    static AcceptanceProfile parse(std::istream& in);
    static AcceptanceProfile load(std::filesystem::path const& path);
    void write(std::ostream& out) const;

private:
    AcceptanceProfile(WordSize word, std::vector<UnitFixed> p, std::size_t padded, std::vector<UnitFixed> bounds);

    WordSize word_;
    std::vector<UnitFixed> p_;
    std::size_t padded_;
    std::vector<UnitFixed> bounds_;
};

inline AcceptanceProfile build_profile(std::vector<UnitFixed> p) { return AcceptanceProfile::build(std::move(p)); }

struct TraversalStats {
    std::uint64_t nodes_visited = 0;
    std::uint64_t range_min_calls = 0;
    std::uint64_t leaves_tested = 0;
    std::uint64_t accepted = 0;

    friend bool operator==(TraversalStats const&, TraversalStats const&) = default;
};

struct CullResult {
    std::vector<std::size_t> accepted;
    TraversalStats stats;
};

struct CullOptions {
    // Re-checks every culled subtree leaf by leaf and throws
    // std::logic_error if it held an acceptable leaf.
    bool verify_culls = false;
};

// Leaves i with value(i) < p[i], ascending. A subtree is skipped when the
// minimum of the sequence over its leaf range is >= its bound.
CullResult hierarchical_cull(ShiftedSequence const& seq, AcceptanceProfile const& profile, CullOptions options = {});

// Leaf-by-leaf filter; the reference for hierarchical_cull.
std::vector<std::size_t> linear_cull(ShiftedSequence const& seq, AcceptanceProfile const& profile);

} // namespace shiftmin
