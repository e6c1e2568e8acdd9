#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace haan {

using AgentId = std::uint32_t;
using HouseId = std::uint32_t;

/// Dense bitset over house (or agent) indices.
using IndexSet = boost::dynamic_bitset<std::uint64_t>;

/// Undirected agent-graph edge. Validated instances store u < v.
struct Edge {
    AgentId u = 0;
    AgentId v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Unvalidated instance data as read from a file or built by a generator.
struct RawInstance {
    std::size_t n_agents = 0;
    std::size_t n_houses = 0;
    std::vector<Edge> edges;
    /// One list per agent; missing trailing agents are treated as empty.
    std::vector<std::vector<HouseId>> preferences;
};

/// A validated house-allocation instance: agents, houses, the agent graph and
/// each agent's set of preferred houses. Immutable once built.
class Instance {
public:
    Instance() = default;

    std::size_t n_agents() const noexcept { return preferred_.size(); }
    std::size_t n_houses() const noexcept { return n_houses_; }
    std::size_t n_edges() const noexcept { return edges_.size(); }

    /// Normalized (u < v) and sorted.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const AgentId> neighbors(AgentId a) const { return neighbors_[a]; }
    std::size_t degree(AgentId a) const { return neighbors_[a].size(); }
    bool adjacent(AgentId a, AgentId b) const { return adjacency_[a].test(b); }
    const IndexSet& adjacency(AgentId a) const { return adjacency_[a]; }

    const IndexSet& preferred(AgentId a) const { return preferred_[a]; }
    std::span<const HouseId> preference_list(AgentId a) const { return preference_lists_[a]; }
    bool prefers(AgentId a, HouseId h) const { return preferred_[a].test(h); }

    /// Largest preference-set size over all agents (0 for the empty instance).
    std::size_t max_preference_size() const noexcept { return max_preference_size_; }

    RawInstance to_raw() const;

    friend bool operator==(const Instance& a, const Instance& b)
    {
        return a.n_houses_ == b.n_houses_ && a.edges_ == b.edges_ &&
               a.preference_lists_ == b.preference_lists_;
    }

private:
    friend Instance validate_instance(const RawInstance& raw);

    std::size_t n_houses_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<AgentId>> neighbors_;
    std::vector<IndexSet> adjacency_;
    std::vector<IndexSet> preferred_;
    std::vector<std::vector<HouseId>> preference_lists_;
    std::size_t max_preference_size_ = 0;
};

/// Validates raw data. Throws Error(InvalidInstance) on an out-of-range index,
/// a self-loop, a duplicate edge (in either orientation) or a duplicate
/// preference entry. Preference lists may be given in any order.
Instance validate_instance(const RawInstance& raw);

/// Injective agent -> house map, indexed by agent.
class Allocation {
public:
    Allocation() = default;
    explicit Allocation(std::vector<HouseId> houses) : houses_(std::move(houses)) {}

    std::size_t size() const noexcept { return houses_.size(); }
    HouseId operator[](AgentId a) const { return houses_[a]; }
    const std::vector<HouseId>& houses() const noexcept { return houses_; }

    friend bool operator==(const Allocation&, const Allocation&) = default;

private:
    std::vector<HouseId> houses_;
};

/// Throws Error(InvalidAllocation) unless `alloc` assigns every agent of
/// `inst` a distinct in-range house.
void check_allocation(const Instance& inst, const Allocation& alloc);

/// Inverse lookup: occupant of each house, if any. Assumes a checked allocation.
std::vector<std::optional<AgentId>> occupants(const Allocation& alloc, std::size_t n_houses);

struct EnvyReport {
    /// envy_sets[a] = neighbours that a envies, ascending.
    std::vector<std::vector<AgentId>> envy_sets;
    std::vector<bool> envious;
    std::vector<bool> happy;
    std::size_t n_envious = 0;
    std::size_t n_happy = 0;
};

/// a envies neighbour a' iff phi(a) is not in P_a and phi(a') is in P_a.
EnvyReport evaluate(const Instance& inst, const Allocation& alloc);

/// Instance with per-agent feasibility sets and a set of angry agents. An
/// angry agent is envious exactly when it does not receive a preferred house,
/// whatever its neighbours hold.
class AnnotatedInstance {
public:
    AnnotatedInstance() = default;

    /// B empty and every house feasible for every agent.
    static AnnotatedInstance unconstrained(Instance base);

    const Instance& base() const noexcept { return base_; }
    const IndexSet& feasible(AgentId a) const { return feasible_[a]; }
    bool is_angry(AgentId a) const { return angry_mask_.test(a); }
    const std::vector<AgentId>& angry() const noexcept { return angry_; }

    friend bool operator==(const AnnotatedInstance& a, const AnnotatedInstance& b)
    {
        return a.base_ == b.base_ && a.feasible_ == b.feasible_ && a.angry_ == b.angry_;
    }

private:
    friend AnnotatedInstance validate_annotated(Instance base,
                                                const std::vector<std::vector<HouseId>>& feasible,
                                                std::vector<AgentId> angry);

    Instance base_;
    std::vector<IndexSet> feasible_;
    IndexSet angry_mask_;
    std::vector<AgentId> angry_;
};

/// `feasible` has one list per agent (an empty outer vector means "all
/// houses"). Throws Error(InvalidInstance) on out-of-range or duplicate
/// entries.
AnnotatedInstance validate_annotated(Instance base,
                                     const std::vector<std::vector<HouseId>>& feasible,
                                     std::vector<AgentId> angry);

struct AnnotatedReport {
    bool feasible_ok = false;
    EnvyReport report;
};

/// Envy under the annotated semantics. For angry agents envy_sets stays empty
/// and only the envious flag is meaningful.
AnnotatedReport evaluate_annotated(const AnnotatedInstance& ann, const Allocation& alloc);

/// Output contract shared by every solver.
struct SolveResult {
    std::size_t min_envy = 0;
    /// Happiness of the returned allocation.
    std::size_t happiness = 0;
    Allocation allocation;
    std::string solver_id;
    std::uint64_t guesses_explored = 0;
};

/// Materialize an IndexSet as an ascending index list.
std::vector<std::uint32_t> to_list(const IndexSet& set);

} // namespace haan
