#include "haan/matching.hpp"
#include "search.hpp"

#include <sstream>

namespace haan {

namespace {

constexpr std::size_t kMinTasks = 64;
constexpr std::size_t kMaxDegree = 62;

// Choice c for an agent: 0 = not envious, unhappy; 1 = not envious, happy;
// c >= 2 = envious of the neighbours in bitmask c - 1 (ascending order).
struct Guess {
    const Instance& inst;
    const IndexSet all_houses;
    std::vector<std::vector<IndexSet>> levels;
    std::vector<std::uint64_t> choice;
    std::size_t envy = 0;
    std::size_t happy = 0;

    explicit Guess(const Instance& in)
        : inst(in), all_houses(IndexSet(in.n_houses()).set()),
          levels(in.n_agents() + 1, std::vector<IndexSet>(in.n_agents(), all_houses)),
          choice(in.n_agents(), 0)
    {
    }

    // Applies agent a's choice on top of level a; false if some set empties.
    bool apply(AgentId a, std::uint64_t c)
    {
        const auto& src = levels[a];
        auto& f = levels[a + 1];
        f = src;
        const bool in_c = c == 1;
        const std::uint64_t mask = c >= 2 ? c - 1 : 0;
        const IndexSet& pa = inst.preferred(a);
        if (in_c)
            f[a] &= pa;
        else
            f[a] -= pa;
        if (f[a].none())
            return false;
        const auto nbrs = inst.neighbors(a);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            IndexSet& fb = f[nbrs[i]];
            if (mask >> i & 1)
                fb &= pa;
            else if (!in_c)
                fb -= pa;
            else
                continue;
            if (fb.none())
                return false;
        }
        choice[a] = c;
        envy += mask != 0;
        happy += in_c;
        return true;
    }

    void undo(AgentId a)
    {
        envy -= choice[a] >= 2;
        happy -= choice[a] == 1;
        choice[a] = 0;
    }
};

} // namespace

SolveResult solve_envy_guess(const Instance& inst, const SolverConfig& cfg)
{
    detail::SearchControl control(cfg);
    detail::require_enough_houses(inst);
    const std::size_t n = inst.n_agents();
    const std::size_t m = inst.n_houses();
    const bool lex = cfg.objective == Objective::MinEnvyThenMaxHappy;
    const std::int64_t weight = detail::envy_weight(inst, cfg.objective);

    std::vector<std::uint64_t> radix(n);
    for (AgentId a = 0; a < n; ++a) {
        if (inst.degree(a) > kMaxDegree) {
            std::ostringstream os;
            os << "agent " << a << " has degree " << inst.degree(a)
               << "; its envy sets cannot be enumerated";
            throw Error(ErrorCode::BudgetExceeded, os.str());
        }
        radix[a] = (std::uint64_t{1} << inst.degree(a)) + 1;
    }

    // Tasks fix the choices of a prefix of agents (agent 0 most significant).
    std::size_t prefix = 0;
    std::size_t n_tasks = 1;
    while (n_tasks < kMinTasks && prefix < n && radix[prefix] <= (1u << 20)) {
        n_tasks *= radix[prefix];
        ++prefix;
    }

    auto task = [&](std::size_t t, detail::TaskBest& best) {
        Guess guess(inst);
        std::vector<std::uint64_t> head(prefix);
        for (std::size_t i = prefix; i-- > 0;) {
            head[i] = t % radix[i];
            t /= radix[i];
        }
        for (AgentId a = 0; a < prefix; ++a)
            if (!guess.apply(a, head[a]))
                return;

        BipartiteGraph g;
        std::vector<HouseId> houses(n);
        auto lower_bound = [&](std::size_t depth) {
            const auto e = static_cast<std::int64_t>(guess.envy);
            if (!lex)
                return e;
            return weight * e - static_cast<std::int64_t>(guess.happy + (n - depth));
        };
        auto dfs = [&](auto&& self, AgentId a) -> void {
            control.poll();
            if (best.value && lower_bound(a) >= *best.value)
                return;
            if (a == n) {
                control.charge();
                ++best.guesses;
                const auto& f = guess.levels[n];
                g.reset(n, m);
                for (AgentId b = 0; b < n; ++b)
                    for (auto h = f[b].find_first(); h != IndexSet::npos; h = f[b].find_next(h))
                        g.add_edge(b, static_cast<HouseId>(h));
                const Matching matching = max_cardinality_matching(g);
                if (matching.size() < n)
                    return;
                for (const auto& [b, h] : matching.pairs)
                    houses[b] = h;
                const auto v = weight * static_cast<std::int64_t>(guess.envy) -
                               (lex ? static_cast<std::int64_t>(guess.happy) : 0);
                best.offer(v, houses);
                return;
            }
            for (std::uint64_t c = 0; c < radix[a]; ++c) {
                if (!guess.apply(a, c))
                    continue;
                self(self, a + 1);
                guess.undo(a);
            }
        };
        dfs(dfs, static_cast<AgentId>(prefix));
    };

    const auto outcome = detail::run_tasks(control, n_tasks, resolve_workers(cfg.workers), task);
    if (!outcome.value)
        throw Error(ErrorCode::InstanceInfeasible, "no guess admits an allocation");
    return detail::make_result(inst, outcome.allocation, "envy-guess", outcome.guesses);
}

} // namespace haan
