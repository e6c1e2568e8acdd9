#include "haan/matching.hpp"
#include "search.hpp"

#include <sstream>

namespace haan {

SolveResult solve_d1_matching(const Instance& inst, const SolverConfig& cfg)
{
    detail::SearchControl control(cfg);
    for (AgentId a = 0; a < inst.n_agents(); ++a) {
        if (inst.preference_list(a).size() > 1) {
            std::ostringstream os;
            os << "agent " << a << " prefers " << inst.preference_list(a).size()
               << " houses; the matching solver needs at most one";
            throw Error(ErrorCode::WrongSolver, os.str());
        }
    }
    detail::require_enough_houses(inst);
    const std::size_t n = inst.n_agents();
    const std::size_t m = inst.n_houses();
    const bool lex = cfg.objective == Objective::MinEnvyThenMaxHappy;
    const std::int64_t weight = detail::envy_weight(inst, cfg.objective);

    // w(a, h): neighbours whose only preferred house is h.
    BipartiteGraph g(n, m);
    std::vector<std::int64_t> w(m);
    for (AgentId a = 0; a < n; ++a) {
        std::fill(w.begin(), w.end(), 0);
        for (AgentId b : inst.neighbors(a))
            if (inst.preference_list(b).size() == 1)
                ++w[inst.preference_list(b)[0]];
        for (HouseId h = 0; h < m; ++h)
            g.add_edge(a, h, weight * w[h] - (lex && inst.prefers(a, h) ? 1 : 0));
    }
    control.charge();
    const Matching matching = min_cost_max_matching(g);
    std::vector<HouseId> houses(n);
    for (const auto& [a, h] : matching.pairs)
        houses[a] = h;
    return detail::make_result(inst, std::move(houses), "d1", 1);
}

} // namespace haan
