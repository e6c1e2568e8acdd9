#pragma once

#include "haan/model.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace haan {

enum class Objective {
    MinEnvy,
    /// Minimum envy first, then maximum happiness.
    MinEnvyThenMaxHappy,
};

inline constexpr std::uint64_t kDefaultGuessLimit = std::uint64_t{1} << 24;

struct SolverConfig {
    Objective objective = Objective::MinEnvy;
    /// Largest separator the separator solver may use; nullopt asks for the
    /// minimum-size separator with no cap.
    std::optional<std::size_t> separator_max_size;
    /// Worker threads; 0 resolves from HAAN_WORKERS, then the hardware.
    std::size_t workers = 0;
    /// Cap on explored guesses; nullopt disables the cap. Must be >= 1.
    std::optional<std::uint64_t> guess_limit = kDefaultGuessLimit;
    /// Cover-size threshold used by the auto dispatcher.
    std::size_t auto_cover_threshold = 8;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    /// Cooperative cancellation; checked alongside the deadline.
    const std::atomic<bool>* cancel = nullptr;
};

/// Throws Error(InvalidConfig) for a zero guess limit.
void validate_config(const SolverConfig& cfg);

/// Number of workers `cfg.workers` resolves to (always >= 1).
std::size_t resolve_workers(std::size_t requested);

/// Exhaustive search over injective assignments; the witness is the first
/// optimum in lexicographic assignment order.
SolveResult solve_bruteforce(const Instance& inst, const SolverConfig& cfg = {});

/// Minimum-cost matching solver for instances with |P_a| <= 1 for every agent.
SolveResult solve_d1_matching(const Instance& inst, const SolverConfig& cfg = {});

/// Guesses every agent's envy set and the happy agents, then checks each guess
/// with a perfect-matching test on the trimmed feasibility sets.
SolveResult solve_envy_guess(const Instance& inst, const SolverConfig& cfg = {});

/// Separator recursion on annotated instances. nullopt means no allocation
/// respects the feasibility sets.
std::optional<SolveResult> solve_separator(const AnnotatedInstance& ann,
                                           const SolverConfig& cfg = {});

/// Enumerates assignments of a vertex cover and completes each with a
/// minimum-cost matching. Without a cover, the lexicographically smallest
/// minimum cover is used.
SolveResult solve_vertex_cover_xp(const Instance& inst,
                                  const std::optional<std::vector<AgentId>>& cover,
                                  const SolverConfig& cfg = {});

/// Algorithm labels accepted by solve().
inline constexpr std::string_view kAlgorithms[] = {"brute", "d1", "envy-guess",
                                                   "separator", "vc-xp", "auto"};

/// Label auto resolves to for `inst`.
std::string_view auto_algorithm(const Instance& inst, const SolverConfig& cfg = {});

/// Dispatches on `algo`. Throws Error(UnknownAlgorithm) for other labels and
/// Error(InstanceInfeasible) when the separator solver finds no allocation.
SolveResult solve(const Instance& inst, std::string_view algo, const SolverConfig& cfg = {});

} // namespace haan
