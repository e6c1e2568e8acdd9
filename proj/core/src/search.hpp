#pragma once

#include "haan/error.hpp"
#include "haan/solvers.hpp"

#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace haan::detail {

/// Thrown inside workers once another worker has failed.
struct Stopped {};

/// Shared guess budget, deadline and cancellation for one solve.
class SearchControl {
public:
    explicit SearchControl(const SolverConfig& cfg);

    /// Counts `n` guesses; throws BudgetExceeded past the limit.
    void charge(std::uint64_t n = 1);
    /// Cheap periodic check of the deadline, cancellation and stop flag.
    void poll();
    /// Immediate check of the deadline, cancellation and stop flag.
    void check_now();
    void stop() noexcept { stopped_.store(true, std::memory_order_relaxed); }

private:

    std::optional<std::uint64_t> limit_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    const std::atomic<bool>* cancel_;
    std::atomic<std::uint64_t> used_{0};
    std::atomic<bool> stopped_{false};
};

/// Best candidate found by one task. Smaller value is better.
struct TaskBest {
    std::optional<std::int64_t> value;
    std::vector<HouseId> allocation;
    std::uint64_t guesses = 0;

    /// Keeps the first strictly better candidate.
    bool offer(std::int64_t v, const std::vector<HouseId>& alloc)
    {
        if (value && v >= *value)
            return false;
        value = v;
        allocation = alloc;
        return true;
    }
};

struct SearchOutcome {
    std::optional<std::int64_t> value;
    std::vector<HouseId> allocation;
    std::uint64_t guesses = 0;
};

/// Runs fn(task, best) for task in [0, n_tasks) on up to `workers` threads.
/// The result is the minimum value, ties going to the lowest task index, so it
/// does not depend on the worker count.
template <class Fn>
SearchOutcome run_tasks(SearchControl& control, std::size_t n_tasks, std::size_t workers, Fn fn)
{
    std::vector<TaskBest> results(n_tasks);
    std::vector<std::exception_ptr> errors(n_tasks);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (;;) {
            const std::size_t task = next.fetch_add(1);
            if (task >= n_tasks)
                return;
            try {
                control.check_now();
                fn(task, results[task]);
            } catch (const Stopped&) {
                return;
            } catch (...) {
                errors[task] = std::current_exception();
                control.stop();
                return;
            }
        }
    };

    const std::size_t threads = std::min(workers, n_tasks);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t i = 0; i < threads; ++i)
            pool.emplace_back(worker);
    }

    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    SearchOutcome out;
    for (TaskBest& r : results) {
        out.guesses += r.guesses;
        if (r.value && (!out.value || *r.value < *out.value)) {
            out.value = r.value;
            out.allocation = std::move(r.allocation);
        }
    }
    return out;
}

/// Weight of one envious agent in the scaled lexicographic objective.
inline std::int64_t envy_weight(const Instance& inst, Objective objective)
{
    return objective == Objective::MinEnvy ? 1 : static_cast<std::int64_t>(inst.n_agents()) + 1;
}

/// Re-evaluates `houses` and fills a SolveResult from the evaluation.
SolveResult make_result(const Instance& inst, std::vector<HouseId> houses, std::string solver_id,
                        std::uint64_t guesses);

/// Throws InstanceInfeasible when there are fewer houses than agents.
void require_enough_houses(const Instance& inst);

} // namespace haan::detail
