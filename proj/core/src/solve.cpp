#include "haan/graphtools.hpp"
#include "search.hpp"

#include <string>

namespace haan {

std::string_view auto_algorithm(const Instance& inst, const SolverConfig& cfg)
{
    if (inst.max_preference_size() <= 1)
        return "d1";
    if (find_min_vertex_cover(inst, cfg.auto_cover_threshold))
        return "vc-xp";
    if (inst.n_agents() + 2 * inst.n_edges() <= 30)
        return "envy-guess";
    return "separator";
}

SolveResult solve(const Instance& inst, std::string_view algo, const SolverConfig& cfg)
{
    if (algo == "auto")
        algo = auto_algorithm(inst, cfg);
    if (algo == "brute")
        return solve_bruteforce(inst, cfg);
    if (algo == "d1")
        return solve_d1_matching(inst, cfg);
    if (algo == "envy-guess")
        return solve_envy_guess(inst, cfg);
    if (algo == "vc-xp")
        return solve_vertex_cover_xp(inst, std::nullopt, cfg);
    if (algo == "separator") {
        detail::require_enough_houses(inst);
        auto result = solve_separator(AnnotatedInstance::unconstrained(inst), cfg);
        if (!result)
            throw Error(ErrorCode::InstanceInfeasible, "no allocation exists");
        return *std::move(result);
    }
    throw Error(ErrorCode::UnknownAlgorithm, "unknown algorithm '" + std::string(algo) + "'");
}

} // namespace haan
