#include "search.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

namespace haan {

void validate_config(const SolverConfig& cfg)
{
    if (cfg.guess_limit && *cfg.guess_limit == 0)
        throw Error(ErrorCode::InvalidConfig, "guess limit must be at least 1");
}

std::size_t resolve_workers(std::size_t requested)
{
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("HAAN_WORKERS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

namespace detail {

SearchControl::SearchControl(const SolverConfig& cfg)
    : limit_(cfg.guess_limit), deadline_(cfg.deadline), cancel_(cfg.cancel)
{
    validate_config(cfg);
}

void SearchControl::charge(std::uint64_t n)
{
    const std::uint64_t before = used_.fetch_add(n, std::memory_order_relaxed);
    if (limit_ && before + n > *limit_) {
        std::ostringstream os;
        os << "more than " << *limit_ << " guesses needed";
        throw Error(ErrorCode::BudgetExceeded, os.str());
    }
    if ((before >> 8) != ((before + n) >> 8))
        check_now();
}

void SearchControl::poll()
{
    thread_local std::uint32_t tick = 0;
    if ((++tick & 1023) == 0)
        check_now();
}

void SearchControl::check_now()
{
    if (stopped_.load(std::memory_order_relaxed))
        throw Stopped{};
    if (cancel_ && cancel_->load(std::memory_order_relaxed))
        throw Error(ErrorCode::Timeout, "cancelled");
    if (deadline_ && std::chrono::steady_clock::now() > *deadline_)
        throw Error(ErrorCode::Timeout, "deadline passed");
}

SolveResult make_result(const Instance& inst, std::vector<HouseId> houses, std::string solver_id,
                        std::uint64_t guesses)
{
    SolveResult r;
    r.allocation = Allocation(std::move(houses));
    const EnvyReport report = evaluate(inst, r.allocation);
    r.min_envy = report.n_envious;
    r.happiness = report.n_happy;
    r.solver_id = std::move(solver_id);
    r.guesses_explored = guesses;
    return r;
}

void require_enough_houses(const Instance& inst)
{
    if (inst.n_houses() < inst.n_agents()) {
        std::ostringstream os;
        os << inst.n_agents() << " agents but only " << inst.n_houses() << " houses";
        throw Error(ErrorCode::InstanceInfeasible, os.str());
    }
}

} // namespace detail
} // namespace haan
