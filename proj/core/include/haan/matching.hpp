#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace haan {

/// Bipartite graph with integer edge costs. A pair that must never be matched
/// is simply not an edge.
class BipartiteGraph {
public:
    struct Arc {
        std::uint32_t left;
        std::uint32_t right;
        std::int64_t cost;
    };

    BipartiteGraph() = default;
    BipartiteGraph(std::size_t n_left, std::size_t n_right) { reset(n_left, n_right); }

    /// Drop all edges and resize; keeps allocated storage.
    void reset(std::size_t n_left, std::size_t n_right);

    /// Throws Error(InvalidConfig) on out-of-range endpoints or a duplicate edge.
    void add_edge(std::uint32_t left, std::uint32_t right, std::int64_t cost = 0);

    std::size_t n_left() const noexcept { return n_left_; }
    std::size_t n_right() const noexcept { return n_right_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    /// Indices into arcs() leaving `left`, in insertion order.
    std::span<const std::uint32_t> out(std::uint32_t left) const { return out_[left]; }

private:
    std::size_t n_left_ = 0;
    std::size_t n_right_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<std::uint32_t>> out_;
    std::vector<boost::dynamic_bitset<std::uint64_t>> present_;
};

struct Matching {
    /// (left, right) pairs sorted by left.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::int64_t total_cost = 0;

    std::size_t size() const noexcept { return pairs.size(); }
};

/// A maximum-cardinality matching (augmenting paths; deterministic).
Matching max_cardinality_matching(const BipartiteGraph& g);

/// Among all maximum-cardinality matchings, one of minimum total cost
/// (successive shortest augmenting paths with Johnson potentials).
Matching min_cost_max_matching(const BipartiteGraph& g);

} // namespace haan
