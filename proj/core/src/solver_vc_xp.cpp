#include "haan/graphtools.hpp"
#include "haan/matching.hpp"
#include "search.hpp"

#include <algorithm>
#include <sstream>

namespace haan {

SolveResult solve_vertex_cover_xp(const Instance& inst,
                                  const std::optional<std::vector<AgentId>>& cover,
                                  const SolverConfig& cfg)
{
    detail::SearchControl control(cfg);
    const std::size_t n = inst.n_agents();
    const std::size_t m = inst.n_houses();
    const SimpleGraph graph(inst);

    std::vector<AgentId> s;
    if (cover) {
        s = *cover;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (!is_vertex_cover(graph, s))
            throw Error(ErrorCode::NotACover, "the supplied agent set misses an edge");
    } else {
        s = *find_min_vertex_cover(graph, n);
    }
    detail::require_enough_houses(inst);

    const std::size_t k = s.size();
    const bool lex = cfg.objective == Objective::MinEnvyThenMaxHappy;
    const std::int64_t weight = detail::envy_weight(inst, cfg.objective);

    IndexSet in_s(n);
    for (AgentId a : s)
        in_s.set(a);
    std::vector<AgentId> rest;
    for (AgentId a = 0; a < n; ++a)
        if (!in_s.test(a))
            rest.push_back(a);

    // Cover neighbours of each agent outside the cover, as positions in s.
    std::vector<std::vector<std::size_t>> cover_nbrs(rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (inst.adjacent(rest[i], s[j]))
                cover_nbrs[i].push_back(j);

    // Tasks fix the house of the first cover agent.
    const std::size_t n_tasks = k == 0 ? 1 : m;

    auto task = [&](std::size_t t, detail::TaskBest& best) {
        std::vector<HouseId> phi(k);
        IndexSet taken(m);
        BipartiteGraph g;
        std::vector<HouseId> houses(n);
        std::vector<HouseId> free_houses;
        std::vector<std::uint32_t> column(m);

        auto evaluate_phi = [&] {
            // J: cover agents already envious of another cover agent.
            std::vector<char> in_j(k, 0);
            std::int64_t happy_s = 0;
            for (std::size_t i = 0; i < k; ++i) {
                const AgentId a = s[i];
                if (inst.prefers(a, phi[i])) {
                    ++happy_s;
                    continue;
                }
                for (std::size_t j = 0; j < k; ++j)
                    if (j != i && inst.adjacent(a, s[j]) && inst.prefers(a, phi[j]))
                        in_j[i] = 1;
            }
            std::vector<std::size_t> open;
            for (std::size_t i = 0; i < k; ++i)
                if (!in_j[i])
                    open.push_back(i);

            free_houses.clear();
            for (HouseId h = 0; h < m; ++h) {
                if (!taken.test(h)) {
                    column[h] = static_cast<std::uint32_t>(free_houses.size());
                    free_houses.push_back(h);
                }
            }
            const auto n_rest = static_cast<std::int64_t>(rest.size());

            std::vector<char> in_c(k, 0);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << open.size()); ++mask) {
                control.poll();
                std::int64_t c_size = 0;
                std::fill(in_c.begin(), in_c.end(), 0);
                for (std::size_t b = 0; b < open.size(); ++b) {
                    if (mask >> b & 1) {
                        in_c[open[b]] = 1;
                        ++c_size;
                    }
                }
                const std::int64_t base =
                    weight * (static_cast<std::int64_t>(k) - c_size) - (lex ? happy_s : 0);
                const std::int64_t bound = base - (lex ? n_rest : 0);
                if (best.value && bound >= *best.value)
                    continue;

                control.charge();
                ++best.guesses;
                g.reset(rest.size(), free_houses.size());
                for (std::size_t i = 0; i < rest.size(); ++i) {
                    const AgentId a = rest[i];
                    for (HouseId h : free_houses) {
                        bool blocked = false;
                        bool envious = false;
                        for (std::size_t j : cover_nbrs[i]) {
                            const AgentId b = s[j];
                            if (in_c[j] && !inst.prefers(b, phi[j]) && inst.prefers(b, h)) {
                                blocked = true;
                                break;
                            }
                            if (inst.prefers(a, phi[j]) && !inst.prefers(a, h))
                                envious = true;
                        }
                        if (blocked)
                            continue;
                        const std::int64_t cost =
                            weight * (envious ? 1 : 0) - (lex && inst.prefers(a, h) ? 1 : 0);
                        g.add_edge(static_cast<std::uint32_t>(i), column[h], cost);
                    }
                }
                const Matching matching = min_cost_max_matching(g);
                if (matching.size() < rest.size())
                    continue;
                const std::int64_t v = base + matching.total_cost;
                if (best.value && v >= *best.value)
                    continue;
                for (std::size_t i = 0; i < k; ++i)
                    houses[s[i]] = phi[i];
                for (const auto& [i, c] : matching.pairs)
                    houses[rest[i]] = free_houses[c];
                best.offer(v, houses);
            }
        };

        auto dfs = [&](auto&& self, std::size_t i) -> void {
            if (i == k) {
                evaluate_phi();
                return;
            }
            const HouseId lo = i == 0 ? static_cast<HouseId>(t) : 0;
            const HouseId hi = i == 0 ? static_cast<HouseId>(t + 1) : static_cast<HouseId>(m);
            for (HouseId h = lo; h < hi; ++h) {
                if (taken.test(h))
                    continue;
                phi[i] = h;
                taken.set(h);
                self(self, i + 1);
                taken.reset(h);
            }
        };
        dfs(dfs, 0);
    };

    const auto outcome = detail::run_tasks(control, n_tasks, resolve_workers(cfg.workers), task);
    if (!outcome.value)
        throw Error(ErrorCode::InstanceInfeasible, "no guess admits an allocation");
    return detail::make_result(inst, outcome.allocation, "vc-xp", outcome.guesses);
}

} // namespace haan
