#include "search.hpp"

#include <map>

namespace haan {

namespace {

constexpr std::size_t kMinTasks = 64;
constexpr HouseId kUnassigned = UINT32_MAX;

// Houses preferred by the same agents are interchangeable; a house may only be
// taken once every lower house of its class is taken.
std::vector<std::int64_t> previous_in_class(const Instance& inst)
{
    std::vector<std::vector<AgentId>> fans(inst.n_houses());
    for (AgentId a = 0; a < inst.n_agents(); ++a)
        for (HouseId h : inst.preference_list(a))
            fans[h].push_back(a);
    std::map<std::vector<AgentId>, std::int64_t> last;
    std::vector<std::int64_t> prev(inst.n_houses(), -1);
    for (HouseId h = 0; h < inst.n_houses(); ++h) {
        auto [it, inserted] = last.try_emplace(fans[h], h);
        if (!inserted) {
            prev[h] = it->second;
            it->second = h;
        }
    }
    return prev;
}

class BruteState {
public:
    BruteState(const Instance& inst, const std::vector<std::int64_t>& prev, std::int64_t weight,
               bool lex)
        : inst_(inst), prev_(prev), weight_(weight), lex_(lex), assign_(inst.n_agents(), kUnassigned),
          used_(inst.n_houses(), 0), envious_(inst.n_agents(), 0)
    {
    }

    std::size_t depth() const noexcept { return depth_; }
    const std::vector<HouseId>& assignment() const noexcept { return assign_; }

    bool allowed(HouseId h) const { return !used_[h] && (prev_[h] < 0 || used_[prev_[h]]); }

    void push(HouseId h)
    {
        const AgentId a = static_cast<AgentId>(depth_);
        const std::size_t mark = changed_.size();
        const bool happy = inst_.prefers(a, h);
        for (AgentId b : inst_.neighbors(a)) {
            if (b >= a)
                break;
            if (!happy && !envious_[a] && inst_.prefers(a, assign_[b])) {
                envious_[a] = 1;
                changed_.push_back(a);
            }
            if (!envious_[b] && !inst_.prefers(b, assign_[b]) && inst_.prefers(b, h)) {
                envious_[b] = 1;
                changed_.push_back(b);
            }
        }
        marks_.push_back(mark);
        assign_[a] = h;
        used_[h] = 1;
        happy_ += happy;
        ++depth_;
    }

    void pop()
    {
        --depth_;
        const AgentId a = static_cast<AgentId>(depth_);
        const HouseId h = assign_[a];
        happy_ -= inst_.prefers(a, h);
        used_[h] = 0;
        assign_[a] = kUnassigned;
        const std::size_t mark = marks_.back();
        marks_.pop_back();
        while (changed_.size() > mark) {
            envious_[changed_.back()] = 0;
            changed_.pop_back();
        }
    }

    std::int64_t envy_count() const noexcept { return static_cast<std::int64_t>(changed_.size()); }

    std::int64_t value() const noexcept
    {
        return weight_ * envy_count() - (lex_ ? static_cast<std::int64_t>(happy_) : 0);
    }

    std::int64_t lower_bound() const noexcept
    {
        if (!lex_)
            return envy_count();
        const auto remaining = static_cast<std::int64_t>(inst_.n_agents() - depth_);
        return weight_ * envy_count() - static_cast<std::int64_t>(happy_) - remaining;
    }

private:
    const Instance& inst_;
    const std::vector<std::int64_t>& prev_;
    std::int64_t weight_;
    bool lex_;
    std::vector<HouseId> assign_;
    std::vector<char> used_;
    std::vector<char> envious_;
    std::vector<AgentId> changed_;
    std::vector<std::size_t> marks_;
    std::size_t happy_ = 0;
    std::size_t depth_ = 0;
};

} // namespace

SolveResult solve_bruteforce(const Instance& inst, const SolverConfig& cfg)
{
    detail::SearchControl control(cfg);
    detail::require_enough_houses(inst);
    const std::size_t n = inst.n_agents();
    const std::size_t m = inst.n_houses();
    const bool lex = cfg.objective == Objective::MinEnvyThenMaxHappy;
    const std::int64_t weight = detail::envy_weight(inst, cfg.objective);
    const std::vector<std::int64_t> prev = previous_in_class(inst);

    // Fixed task split: canonical prefixes of the shallowest depth giving
    // enough tasks, in lexicographic order.
    std::vector<std::vector<HouseId>> prefixes{{}};
    {
        BruteState probe(inst, prev, weight, lex);
        std::size_t depth = 0;
        while (prefixes.size() < kMinTasks && depth < n) {
            std::vector<std::vector<HouseId>> deeper;
            for (const auto& p : prefixes) {
                for (HouseId h : p)
                    probe.push(h);
                for (HouseId h = 0; h < m; ++h) {
                    if (!probe.allowed(h))
                        continue;
                    deeper.push_back(p);
                    deeper.back().push_back(h);
                }
                for (std::size_t i = 0; i < p.size(); ++i)
                    probe.pop();
            }
            prefixes = std::move(deeper);
            ++depth;
        }
    }

    auto task = [&](std::size_t t, detail::TaskBest& best) {
        BruteState state(inst, prev, weight, lex);
        for (HouseId h : prefixes[t])
            state.push(h);
        auto dfs = [&](auto&& self) -> void {
            control.poll();
            if (best.value && state.lower_bound() >= *best.value)
                return;
            if (state.depth() == n) {
                control.charge();
                ++best.guesses;
                best.offer(state.value(), state.assignment());
                return;
            }
            for (HouseId h = 0; h < m; ++h) {
                if (!state.allowed(h))
                    continue;
                state.push(h);
                self(self);
                state.pop();
            }
        };
        dfs(dfs);
    };

    const auto outcome =
        detail::run_tasks(control, prefixes.size(), resolve_workers(cfg.workers), task);
    return detail::make_result(inst, outcome.allocation, "brute", outcome.guesses);
}

} // namespace haan
