#pragma once

#include "haan/model.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace haan {

/// Simple undirected source graph on vertices 0..n_vertices-1.
struct SourceGraph {
    std::size_t n_vertices = 0;
    std::vector<Edge> edges;
};

/// Validates and normalizes (u < v, sorted). Throws Error(InvalidInstance).
SourceGraph make_source_graph(std::size_t n_vertices, std::vector<Edge> edges);

/// How a reduced instance was built; indices refer to the reduced instance.
struct Provenance {
    std::string generator;
    std::vector<std::pair<std::string, std::int64_t>> params;
    /// Set when the parameters fall outside the range the construction is
    /// meant for (the target is still reported as built).
    bool trivial = false;
    SourceGraph source;
    /// Agents created for each source vertex / edge (edges in sorted order).
    std::vector<std::vector<AgentId>> vertex_agents;
    std::vector<std::vector<AgentId>> edge_agents;
    /// Houses created for each source vertex / edge.
    std::vector<std::vector<HouseId>> vertex_houses;
    std::vector<std::vector<HouseId>> edge_houses;
    /// Houses preferred by every agent (identical-preference family only).
    std::vector<HouseId> shared_houses;
    std::vector<HouseId> dummy_houses;
};

struct ReducedInstance {
    Instance instance;
    std::int64_t target_envy = 0;
    Provenance provenance;
};

/// Clique on a regular graph to a complete bipartite instance with d <= 2.
/// Throws NotRegular, BadK (k outside [1, N]).
ReducedInstance gen_clique_bipartite_d2(const SourceGraph& g, std::int64_t k);

/// Assigns h_v to the first agent of each clique vertex, dummies elsewhere.
/// Throws NotAClique, or WrongSolver when `red` comes from another family.
Allocation witness_from_clique(const ReducedInstance& red, const std::vector<std::uint32_t>& clique);

/// Half vertex separator on a 3-regular graph to an identical-preference
/// instance with n = m. Throws Not3Regular, BadK (k outside [0, N]).
ReducedInstance gen_halfsep_3regular(const SourceGraph& g, std::int64_t k);

/// (S, X, Y) for the half-separator family.
struct HalfSeparator {
    std::vector<std::uint32_t> separator;
    std::vector<std::uint32_t> x;
    std::vector<std::uint32_t> y;
};

/// Gives the shared houses to X and the rest to S and Y. Throws BadPartition
/// unless S, X, Y partition V, |X| = |Y| = t, |S| = 2*floor(k/2) and no edge
/// joins X and Y.
Allocation witness_from_separator(const ReducedInstance& red, const HalfSeparator& sep);

/// Grows a valid half separator with |S| <= k to the exact size 2*floor(k/2)
/// by moving the lowest vertices of X and of Y into S. Throws BadPartition.
HalfSeparator pad_half_separator(const SourceGraph& g, std::int64_t k, const HalfSeparator& sep);

/// Clique to a complete bipartite instance with a small vertex cover, after
/// adding t_pad isolated vertices. Throws BadK.
ReducedInstance gen_clique_vc_bipartite(const SourceGraph& g, std::int64_t k, std::int64_t t_pad = 0);

/// Clique to a split-graph instance with t agents per edge. Throws BadK, BadT
/// (t < 1 or no edges).
ReducedInstance gen_clique_vc_split(const SourceGraph& g, std::int64_t k, std::int64_t t);

/// Gives each clique-edge house to its first edge agent (all t of them for the
/// split family), dummies elsewhere. Throws NotAClique.
Allocation witness_from_clique_vc(const ReducedInstance& red, const std::vector<std::uint32_t>& clique);

} // namespace haan
