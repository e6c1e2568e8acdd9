#pragma once

#include "haan/model.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace haan {

/// Plain undirected simple graph on vertices 0..n-1, with sorted adjacency.
class SimpleGraph {
public:
    SimpleGraph() = default;
    /// Throws Error(InvalidInstance) for out-of-range endpoints, self-loops or
    /// duplicate edges.
    SimpleGraph(std::size_t n, const std::vector<Edge>& edges);
    explicit SimpleGraph(const Instance& inst);

    std::size_t size() const noexcept { return adjacency_.size(); }
    std::size_t n_edges() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return adjacency_[v]; }
    bool adjacent(std::uint32_t u, std::uint32_t v) const { return matrix_[u].test(v); }

    /// Subgraph induced by `vertices` (ascending); vertex i of the result is
    /// vertices[i].
    SimpleGraph induced(const std::vector<std::uint32_t>& vertices) const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<std::uint32_t>> adjacency_;
    std::vector<IndexSet> matrix_;
};

/// (S, A1, A2) with S, A1, A2 partitioning the vertices, no A1-A2 edge and
/// |A1|, |A2| <= ceil(2n/3). Index lists are ascending.
struct SeparatorDecomposition {
    std::vector<std::uint32_t> separator;
    std::vector<std::uint32_t> part1;
    std::vector<std::uint32_t> part2;
};

struct SeparatorOptions {
    /// Additionally require |A1|, |A2| < n, so recursion always shrinks.
    bool require_proper_parts = false;
    /// Largest component count for which all groupings are tried.
    std::size_t max_components = 20;
};

struct SeparatorSearch {
    std::optional<SeparatorDecomposition> decomposition;
    /// Set when some candidate separator was skipped for leaving more than
    /// max_components components.
    bool skipped_candidates = false;
    std::string diagnostic;
};

/// Bound on each side of a balanced separator: ceil(2n/3).
std::size_t balanced_part_limit(std::size_t n) noexcept;

/// Smallest balanced separator of size <= max_size; candidates by size then
/// lexicographically; for a fixed S the grouping of components into parts
/// minimizes the larger part, with |A1| >= |A2| and the lexicographically
/// smallest A1 on ties.
SeparatorSearch find_balanced_separator(const SimpleGraph& g, std::size_t max_size,
                                        const SeparatorOptions& options = {});
std::optional<SeparatorDecomposition> find_balanced_separator(const Instance& inst,
                                                              std::size_t max_size);

/// True iff `d` satisfies every SeparatorDecomposition invariant on `g`.
bool is_balanced_separator(const SimpleGraph& g, const SeparatorDecomposition& d);

/// Minimum vertex cover if its size is <= budget (lexicographically smallest
/// among the minimum ones), nullopt otherwise. Bounded search tree.
std::optional<std::vector<std::uint32_t>> find_min_vertex_cover(const SimpleGraph& g,
                                                                std::size_t budget);
std::optional<std::vector<std::uint32_t>> find_min_vertex_cover(const Instance& inst,
                                                                std::size_t budget);

bool is_vertex_cover(const SimpleGraph& g, const std::vector<std::uint32_t>& cover);

/// Common degree if every vertex has the same degree (0 for the empty graph).
std::optional<std::size_t> is_regular(const SimpleGraph& g);
std::optional<std::size_t> is_regular(const Instance& inst);

/// 2-colouring by BFS from the lowest uncoloured vertex (colour 0 first).
struct Bipartition {
    std::vector<std::uint32_t> side0;
    std::vector<std::uint32_t> side1;
};
std::optional<Bipartition> is_bipartite(const SimpleGraph& g);
std::optional<Bipartition> is_bipartite(const Instance& inst);

/// Connected components, each ascending, ordered by smallest vertex.
std::vector<std::vector<std::uint32_t>> connected_components(const SimpleGraph& g,
                                                             const IndexSet& removed);

bool is_clique(const SimpleGraph& g, const std::vector<std::uint32_t>& vertices);

} // namespace haan
